from ph_curves import jobs
from ph_curves.api.serializers import SPACE_KINDS, BasisJobSerializer
from ph_curves.management.base import JobCommand, scalar_option


class Command(JobCommand):
    help = "Canonical basis of Q, R or X at a root beta, or of P^M."
    serializer_class = BasisJobSerializer
    job_options = ("kind", "beta", "m", "M")

    def add_job_arguments(self, parser):
        parser.add_argument("--kind", choices=SPACE_KINDS)
        parser.add_argument("--beta", type=scalar_option)
        parser.add_argument("--m", type=int)
        parser.add_argument("--M", type=int)

    def run(self, data, digits):
        return jobs.run_basis(data, digits)
