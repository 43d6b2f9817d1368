#!/usr/bin/env python3
"""Run the CLI over the sample data and validate every JSON report."""
import json
import subprocess
import sys

import jsonschema


def main():
    crnt, schema_path, data = sys.argv[1:4]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)

    def d(name):
        return f"{data}/{name}"

    runs = []
    for net in ["futile_cycle", "lotka_volterra", "shinar_feinberg", "mfc2", "network38", "network39",
                "two_cycle", "improper_unresolvable", "improper_not_strong"]:
        runs += [["analyze", d(net + ".crn")], ["generators", d(net + ".crn")],
                 ["translate", d(net + ".crn"), "--search"]]
    runs += [
        ["translate", d("shinar_feinberg.crn"), "--translation", d("shinar_feinberg.translation")],
        ["translate", d("improper_unresolvable.crn"), "--translation", d("improper_unresolvable.translation")],
        ["tree-constants", d("two_cycle.crn")],
        ["tree-constants", d("shinar_feinberg.crn"), "--translation", d("shinar_feinberg.translation"),
         "--rates", d("shinar_feinberg.rates")],
        ["steady-states", d("futile_cycle.crn"), "--search", "--rates", d("futile_cycle.rates"),
         "--x0", d("futile_cycle.x0"), "--solve"],
        ["steady-states", d("shinar_feinberg.crn"), "--translation", d("shinar_feinberg.translation"),
         "--rates", d("shinar_feinberg.rates"), "--x0", d("shinar_feinberg.x0"), "--solve"],
        ["steady-states", d("mfc2.crn"), "--translation", d("mfc2.translation")],
        ["steady-states", d("lotka_volterra.crn"), "--translation", d("lotka_volterra_1.translation")],
        ["--sign-dim-cap", "3", "steady-states", d("futile_cycle.crn"), "--search"],
        ["verify", d("futile_cycle.crn"), "--rates", d("futile_cycle.rates"), "--x0", d("futile_cycle.x0")],
    ]
    failures = 0
    for args in runs:
        proc = subprocess.run([crnt, "--json"] + args, capture_output=True, text=True)
        try:
            report = json.loads(proc.stdout)
        except json.JSONDecodeError as e:
            print(f"FAIL {' '.join(args)}: not JSON ({e})")
            failures += 1
            continue
        errors = list(validator.iter_errors(report))
        for err in errors:
            print(f"FAIL {' '.join(args)}: {'/'.join(map(str, err.path))}: {err.message}")
        failures += bool(errors)
    print(f"{len(runs) - failures}/{len(runs)} reports valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
