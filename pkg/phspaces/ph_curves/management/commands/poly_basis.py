from ph_curves import jobs
from ph_curves.api.serializers import PolyBasisJobSerializer
from ph_curves.management.base import JobCommand


class Command(JobCommand):
    help = "Basis of the polynomial solution curves of degree at most M."
    serializer_class = PolyBasisJobSerializer
    job_options = ("M",)

    def add_job_arguments(self, parser):
        parser.add_argument("--M", type=int)

    def run(self, data, digits):
        return jobs.run_poly_basis(data, digits)
