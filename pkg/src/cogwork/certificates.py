"""Machine-readable pass/fail records for verified identities.

A certificate carries the axiom id, the objects involved, the filtration
degree at which the identity was checked, whether the check was exact
(no truncation: finite-dimensional data), and on failure a residue
witness.  Bundles serialize to canonical JSON: given the same inputs and
seed, re-running a suite produces byte-identical bundles.
"""

import json
from dataclasses import dataclass, field


@dataclass
class Certificate:
    check: str
    objects: tuple = ()
    degree: int = 0
    passed: bool = False
    exact: bool = False
    residue: str = None
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "check": self.check,
            "objects": list(self.objects),
            "degree": self.degree,
            "passed": self.passed,
            "exact": self.exact,
            "residue": self.residue,
            "details": self.details,
        }

    def summary_line(self):
        status = "PASS" if self.passed else "FAIL"
        tag = " (exact)" if self.exact else ""
        objs = ",".join(str(o) for o in self.objects)
        return "[%s] %s %s d=%d%s" % (status, self.check, objs, self.degree, tag)

    def __bool__(self):
        return self.passed


def merge(check, objects, parts, degree=None, exact=None, details=None):
    """Combine sub-certificates into one, failing if any part fails."""
    parts = list(parts)
    passed = all(p.passed for p in parts)
    residue = "; ".join(p.residue for p in parts if p.residue) or None
    det = dict(details or {})
    det["parts"] = [p.to_dict() for p in parts]
    return Certificate(
        check=check,
        objects=tuple(objects),
        degree=max((p.degree for p in parts), default=0) if degree is None else degree,
        passed=passed,
        exact=all(p.exact for p in parts) if exact is None else exact,
        residue=residue,
        details=det,
    )


def bundle_json(certs):
    """Canonical JSON for a list of certificates."""
    return json.dumps([c.to_dict() for c in certs], sort_keys=True, indent=1)


def write_bundle(path, certs):
    with open(path, "w") as fh:
        fh.write(bundle_json(certs))
        fh.write("\n")
