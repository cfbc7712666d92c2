from ph_curves import jobs
from ph_curves.api.serializers import VerifyJobSerializer
from ph_curves.management.base import JobCommand, scalar_option


class Command(JobCommand):
    help = ("Report primitivity, genericity, the certificate and degree "
            "bounds of a tangent field and an optional curve.")
    serializer_class = VerifyJobSerializer
    job_options = ("beta", "N")

    def add_job_arguments(self, parser):
        parser.add_argument("--beta", type=scalar_option)
        parser.add_argument("--N", type=int)

    def run(self, data, digits):
        return jobs.run_verify(data, digits)
