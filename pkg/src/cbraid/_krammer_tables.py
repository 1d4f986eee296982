"""Entry formulas of the explicit Krammer matrices, written as plain expressions.

Variables: ``m`` and ``L`` (lambda) for rho3, ``u`` (mu) and ``L`` for rho4,
``r`` and ``t`` for the type A_2 comparison representation.  A second, independent
entry-by-entry encoding lives in ``krammer._rho3_direct`` / ``krammer._rho4_direct``.
"""
import ast
from fractions import Fraction

_AUX3 = {
    "A87": "m*(L**4 - m*L**3 - m*(m**2+1)*L + m**2)/L**7",
    "A97": "-m*(L**4*m - L**2*m + L*m**2 + L - m)/L**7",
    "B81": "-m**3*(L**3 - 2*m*L**2 - L + m)/(L**6*(L-m))",
    "B82": "-m**2*(L**2 - L*m + m**2 + 1)/L",
    "B83": "m*(L**2 - L*m + m**2)/(L**4*(L-m))",
    "B84": "-m*(L**2 - L*m + m**2)/L",
    "B85": "m*(-L**2 + L*m + 1)/L",
    "B86": "-m*(L*m**2 + L + m)/(L-m)",
    "B87": "-m*(m**2+1)/L**3",
    "B88": "-L",
    "B89": "-L*(m**2+1)/(L-m)",
    "B91": "-2*m**2*(L**2-1)/L**6",
    "B92": "m*(-L**2 + 2*L*m - m**2)/L",
    "C81": "m**2*(L**2+m**2)/L**3",
    "C82": "-m**2*(L**2*m + m**3 + L + m)/L**4",
    "C83": "m*(L**2+m**2+1)/L**3",
    "C87": "-m*(L**2+m**2+1)/L**3",
    "C91": "-m*(L**2-m**2)/L**3",
    "C92": "-m**2*(L**2 - L*m + m**2)/L**4",
}

RHO3 = {
    "A": [
        "0 | 0 | 1 | 0 | 0 | 0 | 0 | 0 | 0",
        "0 | 0 | 0 | 1 | 0 | 0 | 0 | 0 | 0",
        "1 | 0 | -m | 0 | 0 | 0 | m*(L-m)/L**3 | 0 | 0",
        "0 | 1 | 0 | -m | 0 | 0 | m/L**6 | 0 | 0",
        "0 | m**2 | 0 | m | 0 | 1 | m/L**4 | 0 | 0",
        "0 | -m*(m**2+1) | 0 | -m**2 | 1 | -m | 0 | 0 | 0",
        "0 | 0 | 0 | 0 | 0 | 0 | 1/L**3 | 0 | 0",
        "-m**2/L**3 | -m*(m**2+1) | -m/L**3 | -m**2 | 0 | 0 | A87 | 0 | 1",
        "m*(m**2+1)/L**3 | m**2*(m**2+2) | m**2/L**3 | m*(m**2+1) | 0 | 0 | A97 | 1 | -m",
    ],
    "B": [
        "1/L**3 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0",
        "0 | -m | 0 | 0 | 0 | 1/(L-m) | 0 | 0 | 0",
        "0 | 0 | 0 | 0 | 0 | 0 | L-m | 0 | 0",
        "-m/L**3 | 0 | -1/L**3 | -m | 0 | 1 | 1/L**3 | 0 | L/(m*(L-m))",
        "m*(L+m)/L**4 | m*L | 0 | L | L-m | m*(L*m+1)/(L-m) | 0 | L/m | m*L/(L-m)",
        "m/L**4 | L-m | 0 | 0 | 0 | 0 | 0 | 0 | 0",
        "m/(L-m) | 0 | 1/(L-m) | 0 | 0 | 0 | -m | 0 | 0",
        "B81 | B82 | B83 | B84 | B85 | B86 | B87 | B88 | B89",
        "B91 | B92 | -m/L**4 | m*(L-m)/L | 0 | 0 | m*(L-m)/L**3 | 0 | 0",
    ],
    "C": [
        "-m | 0 | 0 | 0 | 0 | L | 0 | 0 | 0",
        "0 | 1/L**3 | 0 | 0 | 0 | 0 | 0 | 0 | 0",
        "m**2 | m*L**3 | 0 | L**3 | L**3 | -m*L**3 | -m | L**3/m | -L**3",
        "0 | 0 | 0 | 0 | 0 | 0 | 1/L**3 | 0 | 0",
        "-m/L | m*(L*m+1)/L**3 | -1/L | 0 | 0 | L**2 | 1/L | 0 | L**2/m",
        "1/L | m*(L-m)/L**3 | 0 | 0 | 0 | 0 | 0 | 0 | 0",
        "0 | m*L**3 | 0 | L**3 | 0 | 0 | -m | 0 | 0",
        "C81 | C82 | C83 | 0 | m**2/L**2 | -L**2*m-m**3 | C87 | 0 | -L**2-m**2",
        "C91 | C92 | m**2/L**3 | 0 | m*(L**2+1)/L**2 | -m**2*(2*L**2-1)/L**2 | -m**2/L**3 | 1 | -2*m",
    ],
}

_AUX4 = {
    "D": "(u**4 - u*L - 1)",
    "C52": "(u-1)**2*(u+1)**2*(u**2+1)**2*(u**4 - 2*u**2*L**2 - u*L - 1)/(u**4*L**2*D)",
    "C82": "(u-1)*(u+1)*(u**2+1)*(u**12*L + u**11 - 2*u**9*L**2 - 3*u**8*L - u**6*L**3 - 2*u**7"
           " + 3*u**5*L**2 + 3*u**4*L + u**2*L**3 + u**3 - 2*u*L**2 - L)/(u**6*L**3*D)",
    "C87": "-(u-1)**2*(u+1)**2*(u**2+1)**2*(u**8 - u**5*L - 2*u**4 + 1)/(u**10*D)",
    "C92": "(u-1)*(u+1)*(u**2+1)*(u**6 - u**4*L**2 - u**3*L - u**2 + L**2)/(u**3*L**3*D)",
}

RHO4 = {
    "A": [
        "1/L**2 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0",
        "0 | 0 | 0 | 0 | 0 | 1 | 0 | 0 | 0 | 0 | 0 | 0",
        "(u**4-1)/u**4 | 0 | 1/u**2 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0",
        "0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 1 | 0",
        "(u**4-1)*(u**4*L**2+u**3*L-L**2)/(u**5*L**3) | 0 | 0 | 0 | 0 | 0 | 0 | 0 | L/u | 0 | 0 | 0",
        "-(u**4-1)*(u**5*L-u**2*L**2-u*L)/(u**5*L**3) | 1 | 0 | 0 | 0 | (-u**4+1)/u**2 | 0 | 0 | 0 | 0 | 0 | 0",
        "0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 1",
        "(-u**16+4*u**12-5*u**8+3*u**4-1)/(u**8*L**2) | 0 | 0 | 0 | (u**4-1)/(u*L) | 0 | 0 | 0"
        " | -(u**4-1)**2/u**4 | u/L | 0 | 0",
        "-(u**4-1)**3/(u**6*L**2) | 0 | 0 | 0 | u/L | 0 | 0 | 0 | (-u**4+1)/u**2 | 0 | 0 | 0",
        "-(u**4-1)**3/(u**7*L) | 0 | 0 | 0 | 0 | 0 | 0 | L/u | -(u**4-1)*L/u**3 | (-u**4+1)/u**2 | 0 | 0",
        "(u**4-1)*(-u**4+u*L+1)/(u**5*L) | 0 | 0 | 1 | 0 | 0 | 0 | 0 | 0 | 0 | (-u**4+1)/u**2 | 0",
        "0 | 0 | 0 | 0 | 0 | 0 | 1 | 0 | 0 | 0 | 0 | (-u**4+1)/u**2",
    ],
    "B": [
        "0 | 0 | 1 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0",
        "0 | 0 | 0 | 1 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0",
        "1 | 0 | (-u**4+1)/u**2 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0",
        "0 | 1 | 0 | (-u**4+1)/u**2 | 0 | 0 | (u**4-1)/u**6 | 0 | 0 | 0 | 0 | 0",
        "(u**4-1)**2/u**4 | (u**4-1)/u**2 | (u**4-1)/u**2 | 0 | 0 | 1 | (u**4-1)/(u**5*L) | 0 | 0 | 0 | 0 | 0",
        "(-u**12+2*u**8-2*u**4+1)/u**6 | -(u**4-1)**2/u**4 | -(u**4-1)**2/u**4 | (-u**4+1)/u**2 | 1"
        " | (-u**4+1)/u**2 | 0 | 0 | 0 | 0 | 0 | 0",
        "0 | 0 | 0 | 0 | 0 | 0 | 1/L**2 | 0 | 0 | 0 | 0 | 0",
        "0 | 0 | 0 | 0 | 0 | 0 | (u**4-1)*(u**5*L+u**4-1)/(u**8*L**2) | 0 | 1 | 0 | 0 | 0",
        "0 | 0 | 0 | 0 | 0 | 0 | 0 | 1 | (-u**4+1)/u**2 | 0 | 0 | 0",
        "0 | 0 | 0 | 0 | 0 | 0 | (u**4-1)/(u**7*L) | 0 | 0 | 0 | 1 | 0",
        "0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 1 | (-u**4+1)/u**2 | 0",
        "0 | 0 | 0 | 0 | 0 | 0 | (u**4-1)/u**4 | 0 | 0 | 0 | 0 | 1/u**2",
    ],
    "C": [
        "(-u**4+1)/u**2 | (-u**4+1)/D | 0 | 0 | 0 | -u**2/D | 0 | 0 | 0 | 0 | 0 | 0",
        "0 | 1/L**2 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0",
        "0 | (u**8*L-u**7-2*u**4*L+u**3+L)/(u**2*L*D) | (-u**4+1)/u**2 | 0 | 0 | (u**4-1)/D"
        " | (u**4-1)/(u**4*D) | 0 | 0 | -u**3/(L*D) | 0 | 0",
        "0 | 0 | 0 | 0 | 0 | 0 | L**2/u**4 | 0 | 0 | 0 | 0 | 0",
        "0 | C52 | 0 | (u**4-1)/(u*L) | (-u**4+1)/u**2 | (-u**4+1)/D | L*(u**8-2*u**4+1)/(u**7*D) | 0 | 0"
        " | (-u**4+1)/D | u/L | 0",
        "(-u**4+u*L+1)/u**2 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0",
        "0 | u**2*(u**4-1)/L**2 | 0 | u**4/L**2 | 0 | 0 | (-u**4+1)/u**2 | 0 | 0 | 0 | 0 | 0",
        "(-u**12+2*u**8-2*u**4+1)/u**6 | C82 | (-u**8+2*u**4-1)/u**4 | (u**8-2*u**4+1)/(u**4*L**2) | 0"
        " | (-u**4+1)/(u**2*D) | C87 | 1/u**2 | 0 | (-u**8+2*u**4-1)/(L*D*u**3) | 0 | 0",
        "(-u**12+3*u**8-3*u**4+1)/u**8 | C92 | (-u**8+2*u**4-1)/u**6 | 0 | 0 | 0 | (u**8-2*u**4+1)/(u**8*D)"
        " | 0 | 0 | (-u**4+1)/(L*D*u) | 0 | 1/u**2",
        "-L*(u**8-u**5*L-2*u**4+u*L+1)/u**5 | (u**8-2*u**4+1)/(u**5*L) | -L*(u**4-u*L-1)/u**3"
        " | (u**4-1)/(u**3*L) | 0 | 0 | -L*(u**8-2*u**4+1)/u**9 | 0 | 0 | 0 | 0 | 0",
        "-L*(u**8*L+u**7-2*u**4*L-u**3+L)/u**6 | 0 | -(u**4-1)*L**2/u**4 | 0 | L/u | 0"
        " | -(u**4-1)*L**2/u**6 | 0 | 0 | 0 | 0 | 0",
        "(-u**8+2*u**4-1)/u**4 | 0 | (-u**4+1)/u**2 | 0 | 0 | 0 | 0 | 0 | u**2 | 0 | 0 | (-u**4+1)/u**2",
    ],
}

# Type A_2 comparison representation (Cohen-Gijsbers-Wales part plus a permutation part).
KA2 = {
    "T0": [
        "t**3*r**3 | 0 | t**3*(r**4-r**2) | 0 | 0 | 0 | 0 | 0 | 0",
        "0 | 1/r-r | 1 | 0 | 0 | 0 | 0 | 0 | 0",
        "0 | 1 | 0 | 0 | 0 | 0 | 0 | 0 | 0",
        "0 | 0 | 0 | 1/r-r | 0 | 0 | 1 | 0 | 0",
        "0 | 0 | 0 | 0 | 0 | 0 | 0 | 1 | 0",
        "0 | 0 | 0 | 0 | 0 | 1/r-r | 0 | 0 | 1",
        "0 | 0 | 0 | 1 | 0 | 0 | 0 | 0 | 0",
        "0 | 0 | 0 | 0 | 1 | 0 | 0 | 1/r-r | 0",
        "0 | 0 | 0 | 0 | 0 | 1 | 0 | 0 | 0",
    ],
    "S3": [
        "1/r-r | 0 | 1 | 0 | 0 | 0 | 0 | 0 | 0",
        "0 | t**3*r**3 | t**3*(r**4-r**2) | 0 | 0 | 0 | 0 | 0 | 0",
        "1 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0",
        "0 | 0 | 0 | 1/r-r | 0 | 0 | 0 | 1 | 0",
        "0 | 0 | 0 | 0 | 1/r-r | 0 | 0 | 0 | 1",
        "0 | 0 | 0 | 0 | 0 | 0 | 1 | 0 | 0",
        "0 | 0 | 0 | 0 | 0 | 1 | 1/r-r | 0 | 0",
        "0 | 0 | 0 | 1 | 0 | 0 | 0 | 0 | 0",
        "0 | 0 | 0 | 0 | 1 | 0 | 0 | 0 | 0",
    ],
}


_BIN = {ast.Add: lambda a, b: a + b, ast.Sub: lambda a, b: a - b,
        ast.Mult: lambda a, b: a * b, ast.Div: lambda a, b: a / b}


def evaluate(expr: str, env: dict) -> Fraction:
    """Evaluate an arithmetic expression over Fractions (+ - * / ** and names)."""

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            return env[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = ev(node.right)
                if exp.denominator != 1:
                    raise ValueError("fractional exponent")
                return ev(node.left) ** int(exp)
            return _BIN[type(node.op)](ev(node.left), ev(node.right))
        raise ValueError(f"unsupported syntax in {expr!r}")

    return ev(ast.parse(expr, mode="eval"))


def evaluate_table(rows: list, env: dict, aux: dict | None = None) -> list:
    env = dict(env)
    for name, text in (aux or {}).items():
        env[name] = evaluate(text, env)
    return [[evaluate(cell.strip(), env) for cell in row.split("|")] for row in rows]


def aux3():
    return _AUX3


def aux4():
    return _AUX4
