from ph_curves import jobs
from ph_curves.api.serializers import M0JobSerializer
from ph_curves.management.base import JobCommand, scalar_option


class Command(JobCommand):
    help = "Table of M0(m) at beta for m in [m_from, m_to]."
    serializer_class = M0JobSerializer
    job_options = ("beta", "m_from", "m_to")

    def add_job_arguments(self, parser):
        parser.add_argument("--beta", type=scalar_option)
        parser.add_argument("--m-from", dest="m_from", type=int)
        parser.add_argument("--m-to", dest="m_to", type=int)

    def run(self, data, digits):
        return jobs.run_m0(data, digits)
