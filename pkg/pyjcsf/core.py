"""
Sets up the core objects for PyJCsf such as the exception hierarchy, the base object for commands and the command
line argument parser.

:date: October 2026

"""

import sys
import json
import logging
import argparse

# Exhaustive generation of labelled graphs / posets stops here (2^15 graphs, 130023 posets on 6 points).
DEFAULT_EXHAUSTIVE_CAP = 6
# Single-object computations (X_G, sequencing sums, insertion sweeps) stop here.
DEFAULT_SINGLE_CAP = 9
# Kostka matrices (and therefore the Schur basis) are only computed up to this degree.
DEFAULT_SCHUR_DEGREE_CAP = 8

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


class PyJCsfException(Exception):
    """
    Root of all PyJCsf errors. Every subclass carries the process exit code ``pyjbox`` should terminate with.
    """
    exit_code = 2


class InputParseError(PyJCsfException, ValueError):
    """
    Malformed graph / poset text, unknown fixture names, bad element names.
    """
    exit_code = 2


class ResourceCapError(PyJCsfException):
    """
    An enumeration or computation would exceed its documented cap.
    """
    exit_code = 3


class PreconditionError(PyJCsfException, ValueError):
    """
    An operation was called outside of its domain.

    :param message: Human readable description.
    :type message: str
    :param witness: Optional JSON serialisable object that demonstrates the violation (e.g. a 4-element subposet).
    """
    exit_code = 4

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def check_cap(value, cap, what):
    """
    Raises :class:`ResourceCapError` if ``value`` exceeds ``cap``.
    """
    if cap is not None and value > cap:
        raise ResourceCapError(f"{what} of {value} exceeds the cap of {cap}")


def setup_logging(verbosity=0):
    """
    Configures the root logger once, on stderr. Library modules never call this.

    :param verbosity: 0 for warnings, 1 for info, 2 or more for debug.
    :type verbosity: int
    """
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger().setLevel(level)


def non_negative_int(value):
    """
    argparse type for integers >= 0.
    """
    try:
        int_value = int(value)
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, received {value!r}")
    if int_value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, received {value!r}")
    return int_value


class PyJCommandLineArgumentParser(argparse.ArgumentParser):
    """
    Represents the command line arguments passed to a script along with basic functions to handle them.

    Keeps the `junix' quoting convention <https://github.com/ericfischer/junix#quoting-conventions-for-arguments>`_
    for arguments: a string argument that starts with ``:`` is decoded as JSON, everything else is left alone
    (file names, fixture names and comma separated sequencings stay strings).

    This is basically an argparse.ArgumentParser with an overriden ``parse_args()``.
    """

    def parse_args(self, args = None, namespace = None):

        def process_item(item_value):
            if isinstance(item_value, str) and item_value.startswith(":"):
                try:
                    return json.loads(item_value[1:])
                except json.JSONDecodeError as e:
                    self.error(f"Invalid JSON argument {item_value!r}: {e}")
            return item_value

        parsed_args_result = super().parse_args(args, namespace)
        sub_values = {}

        for var, var_value in vars(parsed_args_result).items():
            if type(var_value) is list:
                sub_values[var] = [process_item(u) for u in var_value]
            elif type(var_value) is str:
                sub_values[var] = process_item(var_value)

        for var, var_value in sub_values.items():
            setattr(parsed_args_result,var,var_value)

        return parsed_args_result


class BasePyJCsfFunction:
    """
    The base object for all PyJCsf scripts.

    It sets up the basic instantiation, argument validation and logic of execution so that actual functionality
    can be implemented by deriving a small amount of functions.

    The ``on_exec_*`` stages return a JSON serialisable payload; ``on_after_exec`` renders it either as compact,
    key-sorted JSON (byte-deterministic for identical inputs) or, with ``--human``, as aligned text.
    """

    def __init__(self, sys_args):
        """
        Initialises the script through a list of parameters.

        This is most commonly ``sys.argv``, but there is nothing stopping someone from instantiating a PyJCsf script
        with the "equivalent" of a call.

        :param sys_args: List of command line arguments.
        :type sys_args: list of str
        """
        self._script_parser = self.on_get_parser()
        if not isinstance(self._script_parser, PyJCommandLineArgumentParser):
            raise TypeError(f"Invalid object type {type(self._script_parser)} returned from on_get_parser(). "
                            "PyJCommandLineArgumentParser expected")
        self._script_arguments = self._script_parser.parse_args(args = sys_args[1:])
        self.exit_code = 0
        setup_logging(getattr(self._script_arguments, "verbose", 0))

    @property
    def script_args(self):
        """
        Returns the parsed arguments in their final (computable) form.
        """
        return self._script_arguments

    @staticmethod
    def add_common_arguments(a_parser, with_vertex_cap=True):
        """
        Adds the switches that every PyJCsf script understands.
        """
        a_parser.add_argument("--human", action="store_true", default=False,
                              help="Render aligned text instead of JSON")
        a_parser.add_argument("-v", "--verbose", action="count", default=0,
                              help="Log progress on stderr (-vv for debug output)")
        if with_vertex_cap:
            a_parser.add_argument("--max-vertices", dest="max_vertices", type=non_negative_int,
                                  default=DEFAULT_SINGLE_CAP,
                                  help=f"Refuse inputs with more vertices than this (default {DEFAULT_SINGLE_CAP})")
        return a_parser

    def on_get_parser(self):
        """
        Returns a PyJCommandLineArgumentParser that takes care of the argument scanning logic of the script.

        Note:
            This function **must** return a descendant of PyJCommandLineArgumentParser.

        :returns: PyJCommandLineArgumentParser.
        """
        return self.add_common_arguments(PyJCommandLineArgumentParser())

    def on_validate_args(self, *args, **kwargs):
        """
        Validates any arguments passed to the script beyond what argparse can express.

        Raises :class:`InputParseError` on invalid input.
        """
        return True

    def on_before_exec(self, *args, **kwargs):
        """
        Called before the execution of the main processing step of the script.

        :returns: A result that is propagated to ``on_exec_*()`` and ``on_after_exec()`` functions.
        """
        return None

    def on_exec_over_params(self, before_exec_result, *args, **kwargs):
        """
        Called to apply the script's functionality over command line parameters.

        If the script was invoked without an input source, this function should return None and the input is read
        from stdin instead.
        """
        return before_exec_result

    def on_exec_over_stdin(self, before_exec_result, *args, **kwargs):
        """
        Called to apply the script's functionality over stdin.
        """
        return before_exec_result

    def on_render_human(self, exec_result):
        """
        Renders the payload for ``--human``. The default is indented JSON.
        """
        return json.dumps(exec_result, sort_keys=True, indent=2)

    def on_after_exec(self, exec_result, *args, **kwargs):
        """
        Called after the main processing stage to render the result.
        """
        if getattr(self.script_args, "human", False):
            rendered = self.on_render_human(exec_result)
        else:
            rendered = json.dumps(exec_result, sort_keys=True)
        return rendered if rendered.endswith("\n") else rendered + "\n"

    def __call__(self, *args, **kwargs):
        """
        Handles the whole script invocation logic.
        """
        exec_result_prm = None
        exec_result_stdin = None
        # Run any initialisation
        prepare_result = self.on_before_exec(*args, **kwargs)
        # Make sure that the arguments are in the expected format
        try:
            self.on_validate_args(*args, **kwargs)
        except PyJCsfException:
            self._script_parser.print_usage(sys.stderr)
            raise
        # Attempt to run over command line input...
        exec_result_prm = self.on_exec_over_params(prepare_result)
        # ...if that does not return anything, run over stdin.
        # If stdin is empty, the script will appear to hang (typical). Ctrl-D to signal EOF.
        if exec_result_prm is None:
            exec_result_stdin = self.on_exec_over_stdin(prepare_result, *args, **kwargs)
            return self.on_after_exec(exec_result_stdin, *args, **kwargs)
        return self.on_after_exec(exec_result_prm, *args, **kwargs)
