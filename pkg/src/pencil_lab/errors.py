"""Exception hierarchy.

Two families matter to callers (and to the command line): ``InvalidInput``
for malformed or out-of-contract arguments, ``Unsupported`` for inputs the
library deliberately refuses (irrational spectrum, unclassifiable ambient,
enumerations that would be too large).
"""


class PencilLabError(Exception):
    pass


class InvalidInput(PencilLabError):
    pass


class Unsupported(PencilLabError):
    pass


class AmbientMismatch(InvalidInput):
    pass


class SizeMismatch(InvalidInput):
    pass


class NotSkewSymmetric(InvalidInput):
    pass


class NotJordan(InvalidInput):
    """The pencil has a Kronecker part where a purely Jordan pencil is needed."""


class NotSingleEigenvalue(InvalidInput):
    pass


class NotSingleEigenvalueJordan(InvalidInput):
    pass


class NotNilpotent(InvalidInput):
    pass


class NotAdmissible(InvalidInput):
    pass


class NotBiIsotropic(InvalidInput):
    pass


class NotBiLagrangian(InvalidInput):
    pass


class NotInvariant(InvalidInput):
    pass


class NotInvariantU(InvalidInput):
    pass


class NotSemisimple(InvalidInput):
    pass


class NotTwoBlocks(InvalidInput):
    pass


class NotGeneric(InvalidInput):
    pass


class InvalidParameters(InvalidInput):
    pass


class QueryShapeMismatch(InvalidInput):
    pass


class NotExtendable(PencilLabError):
    """Raised by extension; ``kind`` is 'mantle' or 'pairing'.

    For 'mantle' the witness is a vector of U outside the mantle; for
    'pairing' it is a pair of vectors of the invariant closure together with
    the name of the form that pairs them nontrivially.
    """

    def __init__(self, kind, witness, form=None):
        self.kind = kind
        self.witness = witness
        self.form = form
        if kind == "mantle":
            msg = "subspace leaves the mantle; witness vector %s" % (list(map(str, witness)),)
        else:
            x, y = witness
            msg = "invariant closure is not isotropic for %s; witness pair %s, %s" % (
                form, list(map(str, x)), list(map(str, y)))
        super().__init__(msg)


class NonRationalEigenvalue(Unsupported):
    pass


class UnsupportedAmbient(Unsupported):
    pass


class TooLarge(Unsupported):
    pass
