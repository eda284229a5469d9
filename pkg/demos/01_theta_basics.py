"""Evaluating theta functions with characteristics and reading the certificate."""

from fractions import Fraction

from thetadft import Characteristics, ThetaPoint, theta_char, theta_value

half = Fraction(1, 2)

# theta(0, i): the classic value 1.0864348112133080...
value, cert = theta_char(Characteristics(), ThetaPoint(0, 1j))
print("theta(0, i)          =", value)
print("  summed |m| <=", cert.m_max, " certified error <=", f"{cert.tail_bound:.1e}")

# the four classical thetas at the same point
x, tau = 0.2 + 0.1j, 0.1 + 0.9j
for a, b in [(0, 0), (half, 0), (0, half), (half, half)]:
    print(f"theta_({a},{b})(x, tau) =", theta_value(x, tau, a, b))

# characteristics must be exact; floats are refused
try:
    Characteristics(0.5, 0)
except TypeError as exc:
    print("refused:", exc)

# nu = 2 replaces (m+a)^2 by (m+a)^4 in the exponent
print("theta(0.1, i, nu=2)  =", theta_value(0.1, 1j, nu=2))

# the error budget is absolute; near the real axis more terms are needed
for im in (1.0, 0.1, 0.01):
    _, cert = theta_char(Characteristics(), ThetaPoint(0, complex(0, im), eps=1e-10))
    print(f"Im tau = {im:<5} needs m_max = {cert.m_max}")
