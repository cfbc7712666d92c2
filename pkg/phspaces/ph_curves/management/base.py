"""Shared plumbing of the PH curve management commands.

A command reads one JSON job (``--input FILE`` or ``--inline JSON``), lets
command-line flags override job keys, validates the job with its serializer,
runs it and writes the result to stdout or ``--output``. Domain errors become
``CommandError`` with the exit code carried by the exception class.
"""
import argparse
import json
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from ph_curves.api.serializers import render_vec3poly
from ph_curves.exceptions import NotPHCurve, PHError

logger = logging.getLogger(__name__)


def scalar_option(value):
    """Command-line scalar: plain text, or a JSON object for Q(sqrt d)."""
    if value.lstrip().startswith("{"):
        try:
            return json.loads(value)
        except json.JSONDecodeError as exc:
            raise argparse.ArgumentTypeError(f"bad scalar {value!r}: {exc}")
    return value


class JobCommand(BaseCommand):
    serializer_class = None
    # Options copied into the job when given on the command line.
    job_options = ()

    def add_arguments(self, parser):
        source = parser.add_mutually_exclusive_group()
        source.add_argument("--input", metavar="FILE",
                            help="Read the JSON job from FILE.")
        source.add_argument("--inline", metavar="JSON",
                            help="JSON job given on the command line.")
        mode = parser.add_mutually_exclusive_group()
        mode.add_argument("--exact", action="store_true",
                          help="Exact scalars (default).")
        mode.add_argument("--digits", nargs="?", type=int, const=-1,
                          metavar="K",
                          help="Decimal scalars rounded to K digits.")
        parser.add_argument("--output", metavar="FILE",
                            help="Write the result to FILE.")
        self.add_job_arguments(parser)

    def add_job_arguments(self, parser):
        pass

    def load_job(self, options):
        if options.get("input"):
            try:
                with open(options["input"], encoding="utf-8") as handle:
                    text = handle.read()
            except OSError as exc:
                raise CommandError(f"cannot read job: {exc}", returncode=2)
        elif options.get("inline"):
            text = options["inline"]
        else:
            text = "{}"
        try:
            job = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CommandError(f"job is not valid JSON: {exc}", returncode=2)
        if not isinstance(job, dict):
            raise CommandError("job must be a JSON object", returncode=2)
        for name in self.job_options:
            value = options.get(name)
            if value is not None and value is not False:
                job[name] = value
        return job

    def resolve_digits(self, options):
        digits = options.get("digits")
        if digits is None:
            return None
        if digits == -1:
            return settings.PH_DECIMAL_DIGITS
        if digits < 0:
            raise CommandError("--digits must be non-negative", returncode=2)
        return digits

    def run(self, data, digits):
        raise NotImplementedError

    def render(self, result):
        return json.dumps(result, indent=2) + "\n"

    def handle(self, *args, **options):
        job = self.load_job(options)
        serializer = self.serializer_class(data=job)
        if not serializer.is_valid():
            raise CommandError(
                f"invalid job: {json.dumps(serializer.errors)}", returncode=2)
        digits = self.resolve_digits(options)
        try:
            result = self.run(serializer.validated_data, digits)
        except NotPHCurve as exc:
            residual = json.dumps(render_vec3poly(exc.residual, digits))
            raise CommandError(
                f"{exc}; (alpha' b - alpha b') x F = {residual}",
                returncode=exc.exit_code,
            ) from exc
        except PHError as exc:
            logger.info("%s failed: %s", self.__module__, exc)
            raise CommandError(str(exc), returncode=exc.exit_code) from exc
        text = self.render(result)
        if options.get("output"):
            try:
                with open(options["output"], "w", encoding="utf-8",
                          newline="") as handle:
                    handle.write(text)
            except OSError as exc:
                raise CommandError(f"cannot write output: {exc}", returncode=2)
        else:
            self.stdout.write(text, ending="")
