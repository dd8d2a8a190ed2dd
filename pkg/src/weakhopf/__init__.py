"""Exact construction and verification of finite weak Hopf quasigroups."""

from .axioms import (
    AXIOMS, DERIVED, antipode_order, check_axioms, check_derived, check_dyslexia,
)
from .constructors import (
    BigroupoidPresentation, GroupoidPresentation, LoopTable, QuotientResult,
    from_bigroupoid, from_groupoid, from_loop,
)
from .errors import (
    CertificateFailure, DimensionMismatch, FieldError, ImproperIdeal,
    InconsistentPresentation, InvalidPresentation, InvalidStructure,
    NotComoduleIso, NotGroupoid, NotIdempotent, NotInvertible, NotIPLoop,
    ParseError, WeakHopfError,
)
from .exact_linear import (
    QQ, Field, LinMap, Splitting, coequalizer, compose, equalizer, flip,
    identity, image_basis, kernel_basis, rank, split_idempotent, tensor,
)
from .hopf_modules import (
    CoinvariantData, FundamentalCertificate, HopfModule, check_hopf_module,
    coinvariants, fundamental_certificate, is_quasilinear, regular_module,
    twisted_module,
)
from .structure import (
    WHQ, SubobjectData, convolution, pi_bar_L, pi_bar_R, pi_L, pi_R,
    subobject_L, subobject_R,
)
from .verdicts import Report, Verdict

__version__ = "0.1.0"
