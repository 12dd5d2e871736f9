"""Exact linear algebra over F_p, Q, k[t] and k(t)."""
from quiverdegen.linalg import ExactMatrix, FieldSpec, factor_squarefree_charpoly, rref, smith_normal_form, solve


def show(m):
    return [[m.field.format(x) for x in row] for row in m.rows]


F3 = FieldSpec.prime(3)
Q = FieldSpec.rationals()
K = FieldSpec.rational_functions(F3)
R = FieldSpec.polynomials(F3)

m = ExactMatrix(Q, [[1, 2], [2, 4]])
red, rank, pivots = rref(m)
print("rref over Q:", show(red), "rank", rank, "pivots", pivots)
print("solve [[1,2],[2,4]] x = (1,3):", solve(m, (1, 3)))

t = K.t
_, rank, _ = rref(ExactMatrix(K, [[t, 1], [t * t, t]]))
print("[[t,1],[t^2,t]] over F_3(t) has rank", rank)

form = smith_normal_form(ExactMatrix(R, [[R.t, R.t], [R.t, R.t]]))
print("Smith form of [[t,t],[t,t]]:", [d.format() for d in form.diagonal])

companion = ExactMatrix(F3, [[0, -1], [1, 0]])
print("charpoly factors of a companion matrix over F_3:",
      [(f.format("x"), k) for f, k in factor_squarefree_charpoly(companion)])
