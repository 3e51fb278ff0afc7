#!/usr/bin/env python3
import sys
import json
from pyjcsf import PyJXg, PyJChromPoly, PyJVerify, PyJSww
from pyjcsf.core import PyJCsfException

script_dir = {
              "pyjxg": PyJXg,
              "pyjchrompoly": PyJChromPoly,
              "pyjverify": PyJVerify,
              "pyjsww": PyJSww,
              }


def main(argv):
    # Complain if pyjbox doesn't know what to do.
    if len(argv) < 2 and "pyjbox" in argv[0]:
        print(f"pyjbox is used to launch pyjcsf scripts.\n\tUsage: pyjbox <script> [script parameters]\n\tScripts "
              f"supported in this version:\n\t\t{', '.join(script_dir.keys())}\n", file=sys.stderr)
        return 2

    if "pyjbox" in argv[0]:
        script_to_run = argv[1]
        script_params = argv[1:]
    else:
        script_to_run = argv[0]
        script_params = argv

    script_to_run = script_to_run.lower().split("/")[-1].replace(".py", "")
    if not script_to_run.startswith("pyj"):
        script_to_run = f"pyj{script_to_run}"
    if script_to_run not in script_dir:
        print(f"pyjbox: unknown script {script_to_run!r}, expected one of {', '.join(script_dir.keys())}",
              file=sys.stderr)
        return 2

    try:
        script = script_dir[script_to_run](script_params)
        result = script()
    except PyJCsfException as e:
        print(f"{script_to_run}: {e}", file=sys.stderr)
        if getattr(e, "witness", None) is not None:
            print(json.dumps(e.witness, sort_keys=True), file=sys.stderr)
        return e.exit_code
    sys.stdout.write(result)
    return script.exit_code


if __name__ == "__main__":
    sys.exit(main(sys.argv))
