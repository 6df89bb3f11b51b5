#!/usr/bin/env python3
"""Fetch the three benchmark datasets and write them as canonical CSVs.

Produces, under --out (default: <repo>/data):

  titanic.csv   pclass,sex,age,sibsp,parch,fare,embarked,survived   (1309 rows)
  boston.csv    CRIM,...,LSTAT,MEDV  (506 rows, race-related column excluded)
  diabetes.csv  AGE,SEX,BMI,BP,TC,LDL,HDL,TCH,LTG,GLU,target        (442 rows)

Diabetes is taken from a local scikit-learn installation when available, so
it works offline. The other two need network access. Each dataset is
fetched independently; failures are reported but do not stop the rest.
"""

import argparse
import csv
import io
import sys
import urllib.request
from pathlib import Path

TITANIC_URLS = [
    "https://hbiostat.org/data/repo/titanic3.csv",
    "https://raw.githubusercontent.com/pcsanwald/kaggle-titanic/master/train.csv",  # 891 rows, last resort
]

BOSTON_CSV_URLS = [
    "https://raw.githubusercontent.com/selva86/datasets/master/BostonHousing.csv",
]
BOSTON_STATLIB_URL = "http://lib.stat.cmu.edu/datasets/boston"

DIABETES_URLS = [
    "https://www4.stat.ncsu.edu/~boos/var.select/diabetes.tab.txt",
    "https://web.stanford.edu/~hastie/Papers/LARS/diabetes.data",
]


def download(url: str, timeout: int = 60) -> str:
    request = urllib.request.Request(url, headers={"User-Agent": "maabo-fetch/1.0"})
    with urllib.request.urlopen(request, timeout=timeout) as response:
        return response.read().decode("utf-8", errors="replace")


def write_csv(path: Path, header, rows):
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        writer.writerows(rows)
    print(f"wrote {path} ({len(rows)} rows)")


def fetch_titanic(out: Path) -> bool:
    wanted = ["pclass", "sex", "age", "sibsp", "parch", "fare", "embarked", "survived"]
    for url in TITANIC_URLS:
        try:
            text = download(url)
        except Exception as error:
            print(f"titanic: {url}: {error}", file=sys.stderr)
            continue
        reader = csv.DictReader(io.StringIO(text))
        lower = {name.lower(): name for name in reader.fieldnames or []}
        if not all(name in lower for name in wanted):
            print(f"titanic: {url}: unexpected columns {reader.fieldnames}", file=sys.stderr)
            continue
        rows = [[record[lower[name]] for name in wanted] for record in reader]
        if len(rows) < 891:
            print(f"titanic: {url}: only {len(rows)} rows", file=sys.stderr)
            continue
        if len(rows) != 1309:
            print(
                f"titanic: warning: {len(rows)} rows instead of the full 1309-row file",
                file=sys.stderr,
            )
        write_csv(out / "titanic.csv", wanted, rows)
        return True
    return False


BOSTON_HEADER = [
    "CRIM", "ZN", "INDUS", "CHAS", "NOX", "RM", "AGE",
    "DIS", "RAD", "TAX", "PTRATIO", "LSTAT", "MEDV",
]


def fetch_boston(out: Path) -> bool:
    # plain CSV mirrors first
    for url in BOSTON_CSV_URLS:
        try:
            text = download(url)
        except Exception as error:
            print(f"boston: {url}: {error}", file=sys.stderr)
            continue
        reader = csv.DictReader(io.StringIO(text))
        lower = {name.lower(): name for name in reader.fieldnames or []}
        wanted = [name.lower() for name in BOSTON_HEADER]
        if not all(name in lower for name in wanted):
            print(f"boston: {url}: unexpected columns {reader.fieldnames}", file=sys.stderr)
            continue
        rows = [[record[lower[name]] for name in wanted] for record in reader]
        if len(rows) != 506:
            print(f"boston: {url}: {len(rows)} rows", file=sys.stderr)
            continue
        write_csv(out / "boston.csv", BOSTON_HEADER, rows)
        return True

    # the original StatLib file: 22 header lines, then each observation on
    # two physical lines (11 + 3 values, the last of the 14 being MEDV)
    try:
        text = download(BOSTON_STATLIB_URL)
    except Exception as error:
        print(f"boston: {BOSTON_STATLIB_URL}: {error}", file=sys.stderr)
        return False
    values = text.split("\n")[22:]
    numbers = " ".join(values).split()
    if len(numbers) % 14 != 0:
        print("boston: statlib file has an unexpected value count", file=sys.stderr)
        return False
    rows = []
    for i in range(0, len(numbers), 14):
        record = numbers[i : i + 14]
        rows.append(record[:11] + [record[12], record[13]])  # drop column B (index 11)
    if len(rows) != 506:
        print(f"boston: statlib parse produced {len(rows)} rows", file=sys.stderr)
        return False
    write_csv(out / "boston.csv", BOSTON_HEADER, rows)
    return True


DIABETES_HEADER = ["AGE", "SEX", "BMI", "BP", "TC", "LDL", "HDL", "TCH", "LTG", "GLU", "target"]


def fetch_diabetes(out: Path) -> bool:
    try:
        from sklearn.datasets import load_diabetes

        bundle = load_diabetes(scaled=False)
        rows = [
            [str(v) for v in features] + [str(target)]
            for features, target in zip(bundle.data, bundle.target)
        ]
        write_csv(out / "diabetes.csv", DIABETES_HEADER, rows)
        return True
    except ImportError:
        pass

    for url in DIABETES_URLS:
        try:
            text = download(url)
        except Exception as error:
            print(f"diabetes: {url}: {error}", file=sys.stderr)
            continue
        lines = [line for line in text.splitlines() if line.strip()]
        rows = [line.split() for line in lines[1:]]  # header: AGE SEX ... Y
        if len(rows) != 442 or any(len(row) != 11 for row in rows):
            print(f"diabetes: {url}: unexpected shape", file=sys.stderr)
            continue
        write_csv(out / "diabetes.csv", DIABETES_HEADER, rows)
        return True
    return False


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out",
        type=Path,
        default=Path(__file__).resolve().parent.parent / "data",
        help="output directory (default: <repo>/data)",
    )
    parser.add_argument(
        "--only",
        choices=["titanic", "boston", "diabetes"],
        action="append",
        help="fetch a subset of the datasets",
    )
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    targets = args.only or ["titanic", "boston", "diabetes"]
    fetchers = {"titanic": fetch_titanic, "boston": fetch_boston, "diabetes": fetch_diabetes}
    failed = [name for name in targets if not fetchers[name](args.out)]
    if failed:
        print(f"failed to fetch: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
