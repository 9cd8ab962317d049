"""Print the monomial matrices of a few classical and multivariate elements.

A small gallery: the binomial triangle and its group inverse, the Catalan
pair from inverting x + x^2, and a genuinely two-variable element whose
matrix is indexed by monomials in graded lexicographic order.

Usage:
    python3 scripts/matrix_gallery.py --trunc 6
"""

import argparse

from riordan.formal_maps import FormalMap
from riordan.matrices import riordan_matrix
from riordan.parser import parse_series
from riordan.riordan import RiordanElement
from riordan.rings import ring_from_tag

ZZ = ring_from_tag("int")


def element(f_text, g_texts, dim, trunc):
    f = parse_series(f_text, dim, trunc, ZZ)
    g = FormalMap([parse_series(t, dim, trunc, ZZ) for t in g_texts])
    return RiordanElement(f, g)


def show(title, a):
    print(f"== {title} ==")
    print(riordan_matrix(a).to_csv(), end="")
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trunc", type=int, default=6)
    ap.add_argument("--dim2-trunc", type=int, default=3, help="order for the two-variable example")
    args = ap.parse_args()
    k = args.trunc

    pascal = element("1/(1-x1)", ["x1/(1-x1)"], 1, k)
    show("binomial triangle (1/(1-x), x/(1-x))", pascal)
    show("its group inverse", pascal.inverse())

    catalan_map = FormalMap([parse_series("x1+x1^2", 1, k, ZZ)]).inverse()
    catalan = RiordanElement(parse_series("1", 1, k, ZZ), catalan_map)
    show("Catalan pair (1, inverse of x + x^2)", catalan)

    two_var = element("1/(1-x1-x2)", ["x1/(1-x1)", "x2/(1-x2)"], 2, args.dim2_trunc)
    show("two variables: (1/(1-x1-x2), x1/(1-x1), x2/(1-x2))", two_var)


if __name__ == "__main__":
    main()
