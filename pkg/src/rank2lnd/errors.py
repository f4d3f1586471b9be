"""Exception hierarchy.

Every analysis failure carries a short machine-readable ``code`` so the CLI
and JSON reports can name the gate that rejected an input.
"""

from __future__ import annotations


class Rank2Error(Exception):
    code = "error"

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.code)
        self.details = details


class VariableMismatch(Rank2Error, ValueError):
    code = "variable-mismatch"


class NonPolynomialRewrite(Rank2Error):
    code = "non-polynomial-rewrite"


class ParseError(Rank2Error, ValueError):
    code = "syntax-error"

    def __init__(self, message: str, text: str = "", pos: int = 0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}", line=line, column=col)
        self.line = line
        self.column = col
        self.pos = pos


class SpecError(Rank2Error, ValueError):
    """Semantically invalid derivation document."""

    code = "spec-error"


class CapExceeded(Rank2Error):
    code = "cap-exceeded"


class NotInKernel(Rank2Error):
    code = "not-in-kernel"


class NotHomogeneous(Rank2Error):
    code = "not-homogeneous"


class NotIrreducible(Rank2Error):
    code = "not-irreducible"


class ZeroDerivation(Rank2Error):
    code = "zero-derivation"


class RankAssumptionViolated(Rank2Error):
    code = "rank-assumption-violated"


class NotRankTwo(Rank2Error):
    code = "not-rank-two"


class NotJacobian(Rank2Error):
    """The derivation is not a scalar multiple of the Jacobian derivation of the kernel pair."""

    code = "not-jacobian"


class ShapeMismatch(Rank2Error):
    code = "shape-mismatch"


class DivisibilityFail(Rank2Error):
    code = "divisibility-fail"


class NewtonGateFail(Rank2Error):
    code = "newton-gate-fail"


class PerfectPowerFail(Rank2Error):
    code = "perfect-power-fail"


class RewriteFail(Rank2Error):
    code = "rewrite-fail"


class TerminalShapeFail(Rank2Error):
    code = "terminal-shape-fail"


class VerificationMismatch(Rank2Error):
    code = "verification-mismatch"


class NotPurePowerOfX(Rank2Error):
    code = "not-pure-power-of-x"


class FormulaOracleMismatch(Rank2Error):
    code = "formula-oracle-mismatch"


class SpanDeficit(Rank2Error):
    code = "span-deficit"


class DependenceFound(Rank2Error):
    code = "dependence-found"


class UndecidedVerdict(Rank2Error):
    code = "undecided"
