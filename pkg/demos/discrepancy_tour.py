"""Tour the cases where a claimed identity does NOT hold.

Exact arithmetic cuts both ways: the same machinery that certifies the
true identities pins down precisely where a plausible-looking claim
fails.  Three registered report-only cases document such claims:

- ``mixed-weighted-pair``: an open chain and a closed chain claimed to
  share the product 1/((q;q)_inf^3 (q;q^2)_inf).  The open side is
  correct; the closed side differs already at q^1, and its true product
  is 1/((q;q^2)_inf^3 (q^2;q^2)_inf).

- ``mod5-chain-1`` / ``mod5-chain-2``: families of weighted chains
  claimed to share one modulus-5 product after clearing (q;q)_inf.  The
  width-3 member of each family is exactly right; every wider member
  first deviates at q^5 — the wider chains build the factor
  1/(q^5;q^5)_inf from a different period, so each matches the target
  only below q^5.

Run:  python3 demos/discrepancy_tour.py
"""

from cylq import report_text, verify


def main() -> int:
    for label in ("mixed-weighted-pair", "mod5-chain-1", "mod5-chain-2"):
        report = verify(label)
        print(report_text(report))
        print()

    print("summary: the open-chain half of the mixed pair is a genuine")
    print("identity; the closed-chain half and the wider modulus-5 chain")
    print("members are off by exactly the coefficients shown above.")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
