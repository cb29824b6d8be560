"""Printed reference values for the three elliptic orbifold mirrors, in parser syntax.

w = exp(2*pi*i/12), so rho = w^4, i = w^3, zeta = w^2 and sqrt(3)*i = 2*w^2 - 1.
Entries are keyed by (j, i) for W-bar / W-tilde and by (kind, j, i) for the
difference quotients g and f, all for the generator chi.  Values known to be
misprinted are kept out of the main tables; see MISPRINTS.
"""

from __future__ import annotations

S3 = "(2*w^2 - 1)"

WBAR = {
    "z3": {
        (0, 0): "phi*(x^3+y^3+z^3) - psi*x*y*z",
        (0, 1): "phi*(x^3+y^3+z^3) - w^8*psi*x*y*z",
        (0, 2): "phi*(x^3+y^3+z^3) - w^4*psi*x*y*z",
        (0, 3): "phi*(x^3+y^3+z^3) - psi*x*y*z",
        (1, 1): "phi*(x'^3+y^3+z^3) - w^8*psi*x'*y*z",
        (1, 2): "phi*(x'^3+y^3+z^3) - w^4*psi*x'*y*z",
        (1, 3): "phi*(x'^3+y^3+z^3) - psi*x'*y*z",
        (2, 2): "phi*(x'^3+y'^3+z^3) - w^4*psi*x'*y'*z",
        (2, 3): "phi*(x'^3+y'^3+z^3) - psi*x'*y'*z",
        (3, 3): "phi*(x'^3+y'^3+z'^3) - psi*x'*y'*z'",
    },
    "z4": {
        (0, 0): "-q*x*y*z + q^6*x^2 + a*(y^4+z^4) + b*y^2*z^2",
        (0, 1): "q^6*x^2 + q*x*y*z + a*y^4 + a*z^4 + b*y^2*z^2",
        (0, 2): "q^6*x^2 - q*w^3*x*y*z + a*y^4 + a*z^4 - b*y^2*z^2",
        (0, 3): "-q*x*y*z + q^6*x^2 + a*(y^4+z^4) + b*y^2*z^2",
        (1, 1): "q^6*x'^2 + q*x'*y*z + a*y^4 + a*z^4 + b*y^2*z^2",
        (1, 3): "q^6*x'^2 - q*x'*y*z + a*y^4 + a*z^4 + b*y^2*z^2",
        (2, 2): "q^6*x'^2 - q*w^3*x'*y'*z + a*y'^4 + a*z^4 - b*y'^2*z^2",
        (2, 3): "q^6*x'^2 - q*x'*y'*z + a*y'^4 + a*z^4 + b*y'^2*z^2",
        (3, 3): "-q*x'*y'*z' + q^6*x'^2 + a*(y'^4+z'^4) + b*y'^2*z'^2",
    },
    "z6": {
        (0, 0): "-q*x*y*z + q^6*x^2 + a1*y^3 + a2*z^6 + a3*y^2*z^2 + a4*y*z^4",
        (0, 1): "q^6*x^2 + q*x*y*z + a1*y^3 + a2*z^6 + a3*y^2*z^2 + a4*y*z^4",
        (0, 3): "-q*x*y*z + q^6*x^2 + a1*y^3 + a2*z^6 + a3*y^2*z^2 + a4*y*z^4",
        (1, 1): "q^6*x'^2 + q*x'*y*z + a1*y^3 + a2*z^6 + a3*y^2*z^2 + a4*y*z^4",
        (1, 2): "q^6*x'^2 - w^2*q*x'*y*z + a1*y^3 + a2*z^6 + w^4*a3*y^2*z^2 + w^8*a4*y*z^4",
        (1, 3): "q^6*x'^2 - q*x'*y*z + a1*y^3 + a2*z^6 + a3*y^2*z^2 + a4*y*z^4",
        (2, 2): "q^6*x'^2 - w^2*q*x'*y'*z + a1*y'^3 + a2*z^6 + w^4*a3*y'^2*z^2 + w^8*a4*y'*z^4",
        (3, 3): "-q*x'*y'*z' + q^6*x'^2 + a1*y'^3 + a2*z'^6 + a3*y'^2*z'^2 + a4*y'*z'^4",
    },
}

WTILDE = {
    "z3": {
        **{k: WBAR["z3"][k] for k in [(0, 0), (0, 1), (0, 2), (0, 3)]},
        (1, 1): "phi*(y^3+z^3)",
        (1, 2): "phi*(y^3+z^3)",
        (1, 3): "phi*(y^3+z^3)",
        (2, 2): "phi*z^3",
        (2, 3): "phi*z^3",
        (3, 3): "0",
    },
    "z4": {
        **{k: WBAR["z4"][k] for k in [(0, 0), (0, 1), (0, 2), (0, 3)]},
        (1, 1): "a*y^4 + a*z^4 + b*y^2*z^2",
        (1, 2): "a*y^4 + a*z^4 - b*y^2*z^2",
        (1, 3): "a*y^4 + a*z^4 + b*y^2*z^2",
        (2, 2): "a*z^4",
        (2, 3): "a*z^4",
        (3, 3): "0",
    },
    "z6": {
        **{k: WBAR["z6"][k] for k in [(0, 0), (0, 1), (0, 3)]},
        (0, 2): "q^6*x^2 - w^2*q*x*y*z + a1*y^3 + a2*z^6 + w^4*a3*y^2*z^2 + w^8*a4*y*z^4",
        (1, 1): "a1*y^3 + a2*z^6 + a3*y^2*z^2 + a4*y*z^4",
        (1, 2): "a1*y^3 + a2*z^6 + w^4*a3*y^2*z^2 + w^8*a4*y*z^4",
        (1, 3): "a1*y^3 + a2*z^6 + a3*y^2*z^2 + a4*y*z^4",
        (3, 3): "0",
    },
}

COEFFS = {
    "z3": {
        ("g", 1, 1): "phi*(x' - w^8*x)",
        ("g", 1, 2): "-w^4*psi*z",
        ("g", 1, 3): "-psi*y",
        ("g", 2, 2): "phi*(y' - w^8*y)",
        ("g", 2, 3): "-psi*x'",
        ("g", 3, 3): "phi*(z' - w^8*z)",
        ("f", 1, 2): "w^4*psi*z/(1 - w^4)",
        ("f", 1, 3): "psi*y/(1 - w^4)",
        ("f", 2, 3): "0",
    },
    "z4": {
        ("g", 1, 1): "q^6",
        ("g", 1, 2): "-q*w^3*z",
        ("g", 1, 3): "-q*y",
        ("g", 2, 2): "a*(y' + y)*(y' + w^3*y) - b*z^2",
        ("g", 2, 3): "-q*x' + b*(y' + y)*(z + w^3*z)",
        ("g", 3, 3): "a*(z' + z)*(z' + w^3*z) + b*y'^2",
        ("f", 1, 3): "q*y/2",
        ("f", 2, 3): "-w^3*b*y*z",
    },
    "z6": {
        ("g", 1, 1): "q^6",
        ("g", 1, 2): "-w^2*q*z",
        ("g", 1, 3): "-q*y",
        ("g", 2, 2): "a1*(y' + w^2*y) + w^4*a3*z^2",
        ("g", 2, 3): f"-q*x' + a3*(y' + y)*(z + w^2*z) + a4*{S3}*z^3",
        ("g", 3, 3): "a2*(z' - w^4*z)*(z' - w^6*z)*(z' - w^8*z)*(z' - w^10*z) + a3*y'^2"
        " + a4*y'*(z'^2 + z'*z + z^2 + (z' + z)*w^2*z + w^4*z^2)",
        ("f", 1, 3): "q*y/2",
        ("f", 2, 3): "(-a3*y*z - w^2*a4*z^3)/(1 - w^2)",
    },
}

# (case, table, key): (printed, corrected, reason)
MISPRINTS = {
    ("z4", "wbar", (1, 2)): (
        "q^6*x'^2 - q*w^3*x*y*z + a*y^4 + a*z^4 - b*y^2*z^2",
        "q^6*x'^2 - q*w^3*x'*y*z + a*y^4 + a*z^4 - b*y^2*z^2",
        "x_1 is already primed for j = 1",
    ),
    ("z6", "wbar", (0, 2)): (
        "q^6*x^2 - w^2*q*x*y*z + a1*y^3 + a2*z^6 + w^4*a3*y^2*z^2 + a4*y*z^4",
        "q^6*x^2 - w^2*q*x*y*z + a1*y^3 + a2*z^6 + w^4*a3*y^2*z^2 + w^8*a4*y*z^4",
        "y*z^4 picks up zeta^2 * zeta^2 = zeta^4 from chi acting on y and z",
    ),
    ("z6", "wbar", (2, 3)): (
        "q^6*x'^2 + q*x'*y'*z + a1*y'^3 + a2*z^6 + a3*y'^2*z^2 + a4*y'*z^4",
        "q^6*x'^2 - q*x'*y'*z + a1*y'^3 + a2*z^6 + a3*y'^2*z^2 + a4*y'*z^4",
        "only z is twisted for i = 3 and chi fixes nothing, so the xyz sign is unchanged",
    ),
    ("z6", "wtilde", (2, 2)): (
        "a*z^4",
        "a2*z^6",
        "the z-only part of W is a2*z^6; 'a' is not a parameter of this potential",
    ),
    ("z6", "wtilde", (2, 3)): (
        "a*z^4",
        "a2*z^6",
        "as for (2, 2)",
    ),
    ("z4", "coeff", ("f", 1, 2)): (
        "-q*w^3*z/2",
        "q*w^3*z/2",
        "sign of the quotient; the printed exp(eta) lines use the + sign",
    ),
    ("z6", "coeff", ("f", 1, 2)): (
        "-w^2*q*z/2",
        "w^2*q*z/2",
        "sign of the quotient; the printed exp(eta) lines use the + sign",
    ),
}

# exp(eta) displays: list of (coefficient, theta indices, d indices)
EXP_DISPLAYS = {
    # theta-free part of exp(eta_chi)(theta_1 theta_2 theta_3)
    ("z3", "exp_chi"): [
        ("-(phi*psi*(y'*y - w^8*y^2) + w^4*psi^2*x'*z)/(1 - w^4)", [], [2]),
        ("w^4*phi*psi*(z'*z - w^8*z^2)/(1 - w^4)", [], [3]),
        ("phi^3*(x' - w^8*x)*(y' - w^8*y)*(z' - w^8*z)", [], [3, 2, 1]),
    ],
    ("z4", "exp_chi"): [
        ("-q^6*b*w^3*y*z", [], [1]),
        ("(q*b*y*z^2 - q*a*(y' + y)*(y' + w^3*y)*y + (-q*x' + b*(y' + y)*(z + w^3*z))*q*w^3*z)/2", [], [2]),
        ("(a*(z' + w^3*z)*(z' + z) + b*y'^2)*q*w^3*z/2", [], [3]),
        ("q^6*(a*(y' + y)*(y' + w^3*y) - b*z^2)*(a*(z' + z)*(z' + w^3*z) + b*y'^2)", [], [3, 2, 1]),
    ],
    # theta-free part of pi(h'_* exp(eta_chi)(theta_1 theta_2 theta_3))
    ("z3", "pi_chi"): [
        ("-(phi*psi*(w^8 - 1)*y^2 + psi^2*x*z)/(1 - w^4)", [], [2]),
        ("phi*psi*(1 - w^4)*z^2/(1 - w^4)", [], [3]),
        ("3*phi^3*(w^8 - w^4)*x*y*z", [], [3, 2, 1]),
    ],
    ("z4", "pi_chi"): [
        ("q^6*b*w^3*y*z", [], [1]),
        ("(-q*b*y*z^2 - 2*w^3*(w^3 + 1)*q*a*y^3 + q^2*w^3*x*z - 2*(w^3 + 1)*q*b*y*z^2)*w^3/2", [], [2]),
        ("(-q*a*(w^3 + 1)*z^3 - q*w^3*b*y^2*z/2)*w^3", [], [3]),
        ("q^6*((2*w^3 - 2)*a*y^2 - b*z^2)*((2*w^3 - 2)*a*z^2 - b*y^2)", [], [3, 2, 1]),
    ],
    ("z6", "pi_chi"): [
        ("q^6*(a3*y*z + w^2*a4*z^3)/(1 - w^2)", [], [1]),
        (f"((-a1*{S3}*y - w^4*a3*z^2)*q*y/2 + (q*x + a3*{S3}*y*z + a4*{S3}*z^3)*w^2*q*z/2)*w^4", [], [2]),
        ("(-6*a2*z^4 + a3*w^8*y^2 + a4*(3*w^8 - 1)*y*z^2)*w^4*q*z/2", [], [3]),
        (f"q^6*(-6*a2*z^4 + a3*w^8*y^2 + a4*(3*w^8 - 1)*y*z^2)*(a1*{S3}*y + w^4*a3*z^2)", [], [3, 2, 1]),
    ],
    # d-free part of exp(eta_{chi^{m-1}})(theta_1 theta_2 theta_3)
    ("z3", "exp_last"): [
        ("1", [1, 2, 3], []),
        ("-w^8*psi*z/(1 - w^8)", [3], []),
        ("psi*y/(1 - w^8)", [2], []),
    ],
    ("z4", "exp_last"): [
        ("1", [1, 2, 3], []),
        ("q*w^3*z/2", [3], []),
        ("q*y/2", [2], []),
        ("-b*w^3*y*z", [1], []),
    ],
    ("z6", "exp_last"): [
        ("1", [1, 2, 3], []),
        ("-w^10*q*z/2", [3], []),
        ("q*y/2", [2], []),
        ("(a3*y*z + w^10*a4*z^3)/(1 - w^10)", [1], []),
    ],
}

# Exact corrections to the pi-lines: computed minus printed, as (coefficient, theta, d).
PI_LINE_CORRECTIONS = {
    "z4": [("(-1 + w^3)*q*b*y*z^2", [], [2])],
    "z6": [
        ("(1/2 - w^2)*q*a4*y*z^3", [], [3]),
        ("(-1 + 2*w^2)*q^6*a3*a4*y*z^4 + 3*w^2*q^6*a1*a4*y^2*z^2", [], [1, 2, 3]),
    ],
}

# structure constants sigma_{chi, chi^{m-1}}
SIGMA_PRINTED = {
    "z3": "(3*phi^3*(w^8 - w^4) - psi^3/3)*x*y*z - phi*psi^2*(w^8 - 1)/3*y^3 - phi*psi^2*(w^8 - 1)/3*z^3",
    "z4": "-q^3*x*y*z/4 + (q^2*a*(w^3 + 1)/2 - 4*q^6*w^3*(w^3 + 1)*a*b)*y^4 + q^2*a*(w^3 + 1)*z^4/2"
    " + (2*q^6*b^2 - 8*q^2*a^2*w^3 - q^2*b*(w^3 - 1)/2)*y^2*z^2",
    "z6": f"(-a1*{S3}*q^2*w^4/4 + q^6*a1*a3*w^8*{S3})*y^3"
    " + (q^6*a4^2 + 3*q^2*a2*w^2/2 - 6*q^6*w^4*a2*a3)*z^6"
    f" + ((9 - {S3})*q^6*a3*a4/2 + (-1 + {S3})*q^2*a4/4 - 6*q^6*a1*a2*{S3})*y*z^4"
    f" + (2*q^6*a3^2 + q^6*a1*a4*(3*w^8 - 1)*{S3})*y^2*z^2 - q^3*x*y*z/4",
}

# corrected readings of the misprinted structure constants
SIGMA_CORRECTED = {
    # q^2 a^2 -> q^6 a^2 and the stray q^2 b (i - 1)/2 term removed; equal in Jac(W)
    "z4": "-q^3*x*y*z/4 + (q^2*a*(w^3 + 1)/2 - 4*q^6*w^3*(w^3 + 1)*a*b)*y^4 + q^2*a*(w^3 + 1)*z^4/2"
    " + (2*q^6*b^2 - 8*q^6*a^2*w^3)*y^2*z^2",
    # three coefficients on y z^4 and y^2 z^2 differ from the printed ones; equal as polynomials
    "z6": f"(-a1*{S3}*q^2*w^4/4 + q^6*a1*a3*w^8*{S3})*y^3"
    " + (q^6*a4^2 + 3*q^2*a2*w^2/2 - 6*q^6*w^4*a2*a3)*z^6"
    f" + ((9 - 3*{S3})*q^6*a3*a4/2 + (-1 + 3*w^2)*q^2*a4/4 - 6*q^6*a1*a2*{S3})*y*z^4"
    " + (2*q^6*a3^2 + (7 - 8*w^2)*q^6*a1*a4)*y^2*z^2 - q^3*x*y*z/4",
}
