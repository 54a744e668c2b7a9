import argparse
import re
import sys

import yaml

# Option values such as -10:10:1001 that argparse would take for flags.
NEGATIVE_VALUE = re.compile(r"^-\.?\d")


class Argument:
    """Declares one command-line option; `options` restricts the values."""
    def __init__(self, *flags, options=None, **kwargs):
        assert flags, "An argument needs at least one flag"
        self.flags = flags
        self.kwargs = dict(kwargs)
        if options is not None:
            self.kwargs["choices"] = options

    @property
    def dest(self):
        if "dest" in self.kwargs:
            return self.kwargs["dest"]
        longest = max(self.flags, key=len)
        return longest.lstrip("-").replace("-", "_")

    def add_to(self, parser):
        return parser.add_argument(*self.flags, **self.kwargs)


def read_config(path):
    # JSON is a subset of YAML, so one loader covers both formats.
    with open(path, "r", encoding="utf-8") as f:
        try:
            content = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ValueError(f"Config file '{path}' is not valid: {e}") from e
    if content is None:
        return {}
    if not isinstance(content, dict):
        raise ValueError(f"Config file '{path}' must hold a mapping")
    return {str(k).replace("-", "_"): v for (k, v) in content.items()}


def build_parser(description, commands, common=()):
    parser = argparse.ArgumentParser(description=description)
    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True
    command_parsers = {}

    for name, arguments in commands.items():
        sub = subparsers.add_parser(name)
        sub.add_argument("--config", help="YAML or JSON run file")
        actions = {}
        for arg in [*common, *arguments]:
            actions[arg.dest] = arg.add_to(sub)
        command_parsers[name] = (sub, actions)
    return parser, command_parsers


def attach_negative_values(argv):
    out = []
    for token in argv:
        if (out and NEGATIVE_VALUE.match(token) and out[-1].startswith("-")
                and "=" not in out[-1]
                and not NEGATIVE_VALUE.match(out[-1])):
            out[-1] = f"{out[-1]}={token}"
        else:
            out.append(token)
    return out


def load_args(description, commands, common=(), argv=None):
    """Parses `argv` for one of `commands`.

    Values found in a `--config` file become defaults of the selected
    command, so explicit flags still win. Keys the command does not declare
    are a usage error.
    """
    argv = attach_negative_values(sys.argv[1:] if argv is None else argv)
    parser, command_parsers = build_parser(description, commands, common)

    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    pre_args, rest = pre.parse_known_args(argv)
    command = next((a for a in rest if not a.startswith("-")), None)

    if pre_args.config and command in command_parsers:
        sub, actions = command_parsers[command]
        config = read_config(pre_args.config)
        unknown = sorted(set(config) - set(actions))
        if unknown:
            sub.error(f"unknown config keys: {', '.join(unknown)}")
        for dest in config:
            actions[dest].required = False
            config[dest] = coerce_config_value(sub, actions[dest],
                                               config[dest])
        sub.set_defaults(**config)

    return vars(parser.parse_args(argv))


def coerce_config_value(sub, action, value):
    """Checks a config value as the flag would be checked on the command
    line."""
    if value is None:
        return None
    key = f"config key '{action.dest}'"

    if action.nargs == 0:
        # Switches such as --verbose.
        if not isinstance(value, bool):
            sub.error(f"{key}: expected true or false, got {value!r}")
        return value

    if action.type is not None:
        if isinstance(value, bool) or (action.type is int
                                       and isinstance(value, float)
                                       and not value.is_integer()):
            sub.error(f"{key}: invalid {action.type.__name__} value: "
                      f"{value!r}")
        try:
            value = action.type(value)
        except (TypeError, ValueError):
            sub.error(f"{key}: invalid {action.type.__name__} value: "
                      f"{value!r}")

    if action.choices is not None and value not in action.choices:
        choices = ", ".join(map(repr, action.choices))
        sub.error(f"{key}: invalid choice {value!r} (choose from {choices})")
    return value
