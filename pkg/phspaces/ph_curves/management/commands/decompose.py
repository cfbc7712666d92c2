from ph_curves import jobs
from ph_curves.api.serializers import CurveJobSerializer
from ph_curves.management.base import JobCommand


class Command(JobCommand):
    help = ("Split a rational PH curve into X-space components at its "
            "denominator roots plus a polynomial curve.")
    serializer_class = CurveJobSerializer

    def run(self, data, digits):
        return jobs.run_decompose(data, digits)
