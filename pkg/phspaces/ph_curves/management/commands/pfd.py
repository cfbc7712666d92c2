from ph_curves import jobs
from ph_curves.api.serializers import CurveJobSerializer
from ph_curves.management.base import JobCommand


class Command(JobCommand):
    help = "Partial fraction decomposition of a rational PH curve."
    serializer_class = CurveJobSerializer
    job_options = ("real_merge",)

    def add_job_arguments(self, parser):
        parser.add_argument(
            "--real-merge", dest="real_merge", action="store_true",
            help="Merge conjugate root pairs over real quadratics.")

    def run(self, data, digits):
        return jobs.run_pfd(data, digits)
