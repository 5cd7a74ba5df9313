from django.db import models

# One row per completed swarm run; written only when a campaign asks for --record.


class SearchRun(models.Model):
    FITNESS_CHOICES = [
        ("fit1", "Nl - cidev1/4 - pcdev1/8"),
        ("fit2", "Nl - cidev2"),
        ("fit3", "Nl - AC_max"),
    ]

    fitness = models.CharField(max_length=8, choices=FITNESS_CHOICES)
    n = models.PositiveSmallIntegerField()
    seed = models.BigIntegerField()
    particles = models.PositiveIntegerField()
    iterations = models.PositiveIntegerField()
    best_fitness = models.FloatField()
    best_table = models.TextField(help_text="Hex truth table of the global best")
    nonlinearity = models.IntegerField()
    degree = models.PositiveSmallIntegerField()
    cidev = models.JSONField(default=dict)
    pcdev = models.JSONField(default=dict)
    ac_max = models.IntegerField()
    evaluations = models.BigIntegerField()
    wall_time = models.FloatField(null=True, blank=True)
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ["-created_at"]

    def __str__(self):
        return f"{self.fitness} n={self.n} seed={self.seed} ({self.best_fitness:g})"
