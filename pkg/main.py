from commons.log import log
from commons.util import create_if_missing, normpath

import helper as h
from args import COMMANDS, COMMON_ARGUMENTS
from closed_form import (markovian_ratio, perturbed_transfer_kernel,
                         run_oracle_suite, transfer_kernel)
from metrics import device_report
from model.builder import ModelBuilder
from model.constant import TWO_LEVEL
from model.exceptions import ParameterError, ScatteringError
from sweep import PRESET_IDS, SweepSpec, figure_preset, run_sweep
from util import load_args

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


def cmd_spectrum(args, axis2=None):
    kind = args["model"]
    spec = SweepSpec(model_kind=kind,
                     base_params=h.build_params(**args),
                     axis1=h.parse_axis(args["delta"], name="delta"),
                     axis2=axis2,
                     observables=h.parse_names(args["obs"]),
                     engine=args["engine"])
    if args["verbose"] and kind == TWO_LEVEL:
        log(f"Markovian ratio: {markovian_ratio(spec.base_params):.3g}")
    table = run_sweep(spec, n_jobs=args["n_jobs"])

    default_name = f"{args['command']}-{kind}.csv"
    path = h.output_path(args["workdir"], args["out"], default_name)
    table.to_csv(path)
    log(f"Saved {len(table)} rows to '{path}'")
    return EXIT_OK


def cmd_map(args):
    axis2 = h.parse_axis(args["axis2"], deg=args["deg"])
    return cmd_spectrum(args, axis2=axis2)


def cmd_figure(args):
    if args["all"]:
        ids = PRESET_IDS
    elif args["id"]:
        ids = [args["id"]]
    else:
        raise ParameterError("Give a figure id or --all")

    out_dir = args["out_dir"] or args["workdir"]
    create_if_missing(out_dir)
    for id in ids:
        spec = h.with_engine(figure_preset(id), args["engine"])
        table = run_sweep(spec, n_jobs=args["n_jobs"])
        path = normpath(f"{out_dir}/{id}.csv")
        table.to_csv(path)
        log(f"> {id}: {len(table)} rows to '{path}'")
    return EXIT_OK


def cmd_verify(args):
    if args["trials"] < 1:
        raise ParameterError(f"trials must be >= 1 (got {args['trials']})")

    kernel = perturbed_transfer_kernel if args["negative_control"] \
        else transfer_kernel
    report = run_oracle_suite(seed=args["seed"],
                              trials=args["trials"],
                              kernel=kernel)
    passed = report.passed(args["tol"])

    print(f"trials={report.trials}")
    print(f"checks={len(report.checked)}")
    print(f"max_deviation={report.max_deviation:.3e}")
    print(f"worst={report.worst}")
    print(f"passed={passed}")
    return EXIT_OK if passed else EXIT_FAILED


def cmd_device(args):
    kind, params = h.build_device_params(**args)
    model = ModelBuilder().build(kind, params)

    router = h.parse_ports(args["router"])
    contrast = h.parse_ports(args["contrast"])
    for name, pair in (("router", router), ("contrast", contrast)):
        if pair is not None and len(pair) != 2:
            raise ParameterError(f"--{name} takes two ports")

    label = args["label"] or args["preset"] or kind
    report = device_report(label,
                           model,
                           args["delta"],
                           router=router,
                           cycle=h.parse_ports(args["cycle"]),
                           contrast=contrast)
    for line in report.lines():
        print(line)
    return EXIT_OK


COMMAND_FN = {
    "spectrum": cmd_spectrum,
    "map": cmd_map,
    "figure": cmd_figure,
    "verify": cmd_verify,
    "device": cmd_device,
}


def run(args):
    command = args["command"]
    assert command in COMMAND_FN, f"Unknown command: '{command}'"

    try:
        return COMMAND_FN[command](args)
    except ScatteringError as e:
        log(f"ERROR: {type(e).__name__}: {e}")
        return EXIT_USAGE
    except OSError as e:
        log(f"ERROR: I/O error: {e}")
        return EXIT_IO


def main(argv=None):
    try:
        args = load_args('Giant atom scattering', COMMANDS, COMMON_ARGUMENTS,
                         argv)
    except SystemExit as e:
        return EXIT_OK if e.code is None else e.code
    except OSError as e:
        log(f"ERROR: Cannot read config: {e}")
        return EXIT_IO
    except ValueError as e:
        log(f"ERROR: Invalid config: {e}")
        return EXIT_USAGE

    args["workdir"] = h.format_dir(args["workdir"], **args)
    if args["verbose"]:
        log(f"Arguments: {args}")
    return run(args)


if __name__ == "__main__":
    raise SystemExit(main())
