"""Walk through the B2 example w = s1 s2 s1 (1 = short, 2 = long) and print every step."""

from schubsing import build_root_system, from_word
from schubsing.peterson import TranslateRequest, peterson_translate
from schubsing.schubert import curve_weights, variety
from schubsing.singloc import smoothness_report, zariski_tangent_bounds


def main():
    rs = build_root_system("B2")
    w = from_word(rs, [1, 2, 1])
    X = variety(w)
    rep = smoothness_report(w)
    bounds = zariski_tangent_bounds(w)
    for x in X.interval:
        print(f"x = {list(x.word)}  {rep.verdicts[x].value}")
        print(f"  curve weights  {curve_weights(w, x).to_json()}")
        b = bounds[x]
        print(f"  tangent space  {b.lower.to_json() if b.exact else 'undetermined'}")
        for g in X.upward_roots(x):
            y = X._refl[g.index] * x
            if rep.is_smooth(y):
                tau = peterson_translate(TranslateRequest(w, y, g))
                print(f"  translate from {list(y.word)} along {list(g.coords)}: {tau.to_json()}")
    print("maximal singular points:", [list(x.word) for x in rep.max_singular])


if __name__ == "__main__":
    main()
