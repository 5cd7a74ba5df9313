from django.db import models


class MetaRun(models.Model):
    METHOD_CHOICES = [
        ("lus", "Local Unimodal Sampling"),
        ("cga", "Continuous Genetic Algorithm"),
    ]

    method = models.CharField(max_length=8, choices=METHOD_CHOICES)
    fitness = models.CharField(max_length=8)
    n = models.PositiveSmallIntegerField()
    seed = models.BigIntegerField()
    mean_g = models.FloatField()
    max_g = models.FloatField()
    mfit = models.FloatField()
    w = models.FloatField()
    phi = models.FloatField()
    psi = models.FloatField()
    v_max = models.FloatField()
    evaluations = models.BigIntegerField()
    wall_time = models.FloatField(null=True, blank=True)
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ["-created_at"]

    def __str__(self):
        return f"{self.get_method_display()} {self.fitness} mfit={self.mfit:g}"
