"""Regenerate the hook-term deviations file from the oracle audit.

    python3 scripts/write_deviations.py src/immpoly/data/deviations.csv
"""

import argparse

from immpoly.hooks import deviations_csv, sign_audit


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out")
    args = ap.parse_args(argv)
    with open(args.out, "w") as fh:
        fh.write(deviations_csv(sign_audit()))


if __name__ == "__main__":
    main()
