from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name="MetaRun",
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
                    "method",
                    models.CharField(
                        choices=[
                            ("lus", "Local Unimodal Sampling"),
                            ("cga", "Continuous Genetic Algorithm"),
                        ],
                        max_length=8,
                    ),
                ),
                ("fitness", models.CharField(max_length=8)),
                ("n", models.PositiveSmallIntegerField()),
                ("seed", models.BigIntegerField()),
                ("mean_g", models.FloatField()),
                ("max_g", models.FloatField()),
                ("mfit", models.FloatField()),
                ("w", models.FloatField()),
                ("phi", models.FloatField()),
                ("psi", models.FloatField()),
                ("v_max", models.FloatField()),
                ("evaluations", models.BigIntegerField()),
                ("wall_time", models.FloatField(blank=True, null=True)),
                ("created_at", models.DateTimeField(auto_now_add=True)),
            ],
            options={
                "ordering": ["-created_at"],
            },
        ),
    ]
