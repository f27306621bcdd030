"""Exact globalization of partial group actions on finite-dimensional algebras.

The heavy lifting lives in the compiled extension ``_pglob``; this package
re-exports its surface. Rationals cross the boundary as ``"p/q"`` strings
(plain ints are accepted on input), matrices as row-major nested lists.
"""

try:
    # Installed layout: the extension lives inside the package.
    from ._pglob import (  # noqa: F401
        Algebra,
        Covariant,
        Dilated,
        Group,
        InputError,
        Lambda,
        MathError,
        PartialRep,
        Report,
        build_lambda,
        check_adjunction,
        check_semidirect,
        cyclic_group,
        dilated,
        lift_to_lambda,
        symmetric_group_s3,
        validate_document,
        validate_group,
        zero_algebra,
    )
except ImportError:
    # Development layout: the extension sits next to the package on the path.
    from _pglob import (  # noqa: F401
        Algebra,
        Covariant,
        Dilated,
        Group,
        InputError,
        Lambda,
        MathError,
        PartialRep,
        Report,
        build_lambda,
        check_adjunction,
        check_semidirect,
        cyclic_group,
        dilated,
        lift_to_lambda,
        symmetric_group_s3,
        validate_document,
        validate_group,
        zero_algebra,
    )

__all__ = [
    "Algebra",
    "Covariant",
    "Dilated",
    "Group",
    "InputError",
    "Lambda",
    "MathError",
    "PartialRep",
    "Report",
    "build_lambda",
    "check_adjunction",
    "check_semidirect",
    "cyclic_group",
    "dilated",
    "lift_to_lambda",
    "symmetric_group_s3",
    "validate_document",
    "validate_group",
    "zero_algebra",
]
