"""
The wedge operator on a small field
===================================

f |> g is the minimal polynomial of f(a), where a is a root of g.
Over F_3 the three monic irreducible quadratics form a stable set.
"""

from wedgelab import PolySet, build_graph, enumerate_irreducibles, field_create, format_poly, wedge
from wedgelab.search import is_stable, self_image

F = field_create(3)
E = list(enumerate_irreducibles(F, 2))
print("E(3^2):", ", ".join(format_poly(f) for f in E))

# every ordered pair, including f |> f (which is always x)
for f in E:
    for g in E:
        h, r = wedge(f, g)
        print(f"  {format_poly(f):>10} |> {format_poly(g):<10} = {format_poly(h)}" + (f"  (^{r})" if r > 1 else ""))

S = PolySet(E)
print("stable:", is_stable(S))
print("self-image:", [format_poly(f) for f in self_image(S)])

# the graph: g -> h labelled by the polynomials f with f |> g = h
print(build_graph(S).to_dot())
