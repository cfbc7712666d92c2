import csv
import io

from ph_curves import jobs
from ph_curves.api.serializers import SampleJobSerializer
from ph_curves.management.base import JobCommand, scalar_option


class Command(JobCommand):
    help = "Sample a curve at equally spaced parameters as CSV rows t,x,y,z."
    serializer_class = SampleJobSerializer
    job_options = ("t0", "t1", "count")

    def add_job_arguments(self, parser):
        parser.add_argument("--t0", type=scalar_option)
        parser.add_argument("--t1", type=scalar_option)
        parser.add_argument("--count", type=int)

    def run(self, data, digits):
        return jobs.run_sample(data, digits)

    def render(self, rows):
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["t", "x", "y", "z"])
        writer.writerows(rows)
        return buffer.getvalue()
