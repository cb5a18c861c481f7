"""JSON and CSV renderings of the results.

JSON keys are sorted and floats printed by ``json`` itself, so identical runs
produce identical bytes.
"""

import csv
import io
import json

import numpy

SWEEP_HEADER = ["instance", "|S|", "bound", "ratio"]


def _default(value):
    if isinstance(value, numpy.generic):
        return value.item()
    raise TypeError("%r is not JSON serializable" % (value,))


def dumps(data):
    return json.dumps(data, indent=2, sort_keys=True, default=_default)


def csv_text(header, rows):
    stream = io.StringIO()
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return stream.getvalue()


def sum_document(ring, f, result, conductor=None, bounds=None, passed=None):
    """The report of a single exponential sum"""
    p, l, m = ring
    document = {"ring": {"p": p, "l": l, "m": m}, "f": str(f), "sum": result.as_dict()}
    if conductor is not None:
        document["conductor"] = conductor.as_dict()
    if bounds is not None:
        document["bounds"] = dict(bounds)
    if passed is not None:
        document["pass"] = passed
    return document


def sweep_document(sweep):
    return {"summary": sweep.summary(), "reports": [report.as_dict() for report in sweep.reports]}


def sweep_rows(sweep):
    return [report.as_row() for report in sweep.reports]
