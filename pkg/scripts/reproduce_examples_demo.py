from __future__ import annotations

from selfdual_codes_lib import (
    count_selfdual_cyclic,
    count_selfdual_negacyclic,
    enumerate_selfdual_negacyclic,
    factor_xn_minus_a,
    format_poly,
    load_env_from_repo_root,
    make_field,
    negacyclic_codes_length_2pr,
    oracle_selfdual_search,
    thm3_exists_selfdual_via_order,
)


def show_factorization(p: int, s: int, n: int, a: int) -> None:
    fz = factor_xn_minus_a(make_field(p, s), n, a)
    print(f"{format_poly(fz.target)} over {fz.field.label}: {fz.describe()}  (s={fz.s}, t={fz.t})")


def main() -> None:
    load_env_from_repo_root()

    print("\n=== Negacyclic codes of length 2p^r ===\n")
    for p, s, r in ((5, 1, 1), (3, 2, 1)):
        field = make_field(p, s)
        family = negacyclic_codes_length_2pr(field, r)
        print(f"{field.label}, n={2 * p**r}: {len(family)} codes")

    print("\n=== Existence by factorization ===\n")
    for p, s, n in ((5, 1, 10), (3, 1, 6)):
        show_factorization(p, s, n, -1)
        field = make_field(p, s)
        for g in enumerate_selfdual_negacyclic(field, n):
            print(f"  {format_poly(g)}")

    print("\n=== Order criterion against the oracle ===\n")
    for p, s, m, r in ((5, 1, 7, 1), (3, 2, 5, 1)):
        field = make_field(p, s)
        n = 2 * m * p**r
        claimed = thm3_exists_selfdual_via_order(field, m, r)
        count = count_selfdual_negacyclic(field, n)
        found = oracle_selfdual_search(field, n, -1, verbose=True)
        print(f"{field.label}, n={n}: order criterion says {claimed}, engine {count}, oracle {len(found)}")

    print("\n=== Self-dual cyclic codes in characteristic 2 ===\n")
    for s, n in ((1, 6), (1, 14), (2, 10)):
        field = make_field(2, s)
        show_factorization(2, s, n, 1)
        print(f"  {count_selfdual_cyclic(field, n)} self-dual cyclic codes")


if __name__ == "__main__":
    main()
