from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name="SearchRun",
            fields=[
                (
                    "id",
                    models.BigAutoField(
                        auto_created=True,
                        primary_key=True,
                        serialize=False,
                        verbose_name="ID",
                    ),
                ),
                (
                    "fitness",
                    models.CharField(
                        choices=[
                            ("fit1", "Nl - cidev1/4 - pcdev1/8"),
                            ("fit2", "Nl - cidev2"),
                            ("fit3", "Nl - AC_max"),
                        ],
                        max_length=8,
                    ),
                ),
                ("n", models.PositiveSmallIntegerField()),
                ("seed", models.BigIntegerField()),
                ("particles", models.PositiveIntegerField()),
                ("iterations", models.PositiveIntegerField()),
                ("best_fitness", models.FloatField()),
                (
                    "best_table",
                    models.TextField(help_text="Hex truth table of the global best"),
                ),
                ("nonlinearity", models.IntegerField()),
                ("degree", models.PositiveSmallIntegerField()),
                ("cidev", models.JSONField(default=dict)),
                ("pcdev", models.JSONField(default=dict)),
                ("ac_max", models.IntegerField()),
                ("evaluations", models.BigIntegerField()),
                ("wall_time", models.FloatField(blank=True, null=True)),
                ("created_at", models.DateTimeField(auto_now_add=True)),
            ],
            options={
                "ordering": ["-created_at"],
            },
        ),
    ]
