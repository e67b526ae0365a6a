#!/usr/bin/python3
""" Command line interface to numeration systems, their languages and Gray codes """

import sys
import enum
import json
import logging
import functools
import contextlib

import click

from pynumgray.basis import InvalidSequenceError, NonMonotonicBasisError, NumerationBasis, SequenceKind, SequenceSpec
from pynumgray.codec import DigitOutOfRangeError, DigitString, decode, encode, is_valid
from pynumgray.config import Settings, SizeGuardError
from pynumgray.graycode import brgc_cursor, gray_language, hamming
from pynumgray.language import language_by_counting
from pynumgray.oracle import SUITES, run_suite
from pynumgray.perm import adjacent_transposition_delta, class_size, gray_perms_cursor, perm_set, string_from_perm


class ExitCode(enum.IntEnum):
    OK = 0
    VERIFICATION_FAILED = 1
    USAGE = 2
    BAD_DIGIT = 3
    STRICT_INVALID = 4
    SIZE_GUARD = 5
    SELF_CHECK_FAILED = 6


def fail(message, code):
    """ Print an error message on stderr and exit with the given code """
    click.echo(f'ERROR {message}', err=True)
    click.get_current_context().exit(code)


@contextlib.contextmanager
def size_guarded():
    """ Map refused enumerations to their exit code """
    try:
        yield
    except SizeGuardError as err:
        fail(err, ExitCode.SIZE_GUARD)


def sequence_options(func):
    """ Add the --seq, --k and --h options, and pass a validated `spec` instead """
    @click.option('--seq', 'seq', required=True, type=click.Choice([kind.value for kind in SequenceKind]),
                  help='Sequence used as numeration system')
    @click.option('--k', 'k', type=int, default=None, help='First parameter: run length or leading coefficient')
    @click.option('--h', 'h', type=int, default=None, help='Second parameter of linplus and linminus')
    @functools.wraps(func)
    def wrapped(seq, k, h, **kwargs):
        try:
            spec = SequenceSpec.parse(seq, k, h)
        except InvalidSequenceError as err:
            raise click.BadParameter(str(err), param_hint='--seq/--k/--h')
        return func(spec=spec, **kwargs)
    return wrapped


def guard_options(func):
    """ Add the size guard override options, and pass the resulting `settings` instead """
    @click.option('--size-limit', type=click.IntRange(min=0), default=None,
                  help='Largest number of strings to produce (default from config or $PYNUMGRAY_SIZE_LIMIT)')
    @click.option('--force/--no-force', default=None, help='Ignore all size limits')
    @click.pass_context
    @functools.wraps(func)
    def wrapped(ctx, size_limit, force, **kwargs):
        try:
            settings = Settings(ctx.obj.get('config'), string_limit=size_limit, force=force)
        except (ValueError, FileNotFoundError) as err:
            raise click.UsageError(f'Invalid configuration: {err}')
        return func(settings=settings, **kwargs)
    return wrapped


def make_basis(spec):
    """ Build the basis for `spec`, reporting a non-increasing sequence as a bad parameter """
    try:
        return NumerationBasis(spec)
    except NonMonotonicBasisError as err:
        raise click.BadParameter(str(err), param_hint='--seq/--k/--h')


def output(items, kind, params, as_json):
    """ Print items one per line as they are produced, or as a single JSON document

    Args:
        items (iterable): strings or permutations, or tuples of them
        kind (`str`): the kind of objects listed
        params (`dict`): parameters that produced the list
        as_json (`bool`): whether to print JSON
    """
    if not as_json:
        for item in items:
            click.echo(' '.join(map(str, item)) if isinstance(item, tuple) else str(item))
        return

    def jsonable(item):
        if isinstance(item, tuple):
            return [jsonable(part) for part in item]
        return list(item.entries) if hasattr(item, 'entries') else str(item)

    items = [jsonable(item) for item in items]
    click.echo(json.dumps({'kind': kind, 'params': params, 'count': len(items), 'items': items}))


@click.group(help='Numeration systems over increasing sequences, 1^k-avoiding strings and their Gray codes')
@click.option('--config', '-c', type=click.Path(exists=True, dir_okay=False),
              help='Configuration file, ini with a [pynumgray] section or toml with a [tool.pynumgray] table')
@click.option('--verbose', '-v', count=True, help='Log more details on stderr (repeatable)')
@click.help_option('--help', '-h')
@click.pass_context
def cli(ctx, config, verbose):
    """ Handle command line interface. Options passed on the command line override options from any config file.

    Args:
        config (:class:`~click.Path`): an optional configuration file
        verbose (`int`): the verbosity level
    """
    logging.basicConfig(level=max(logging.DEBUG, logging.WARNING - 10 * verbose), stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')
    ctx.ensure_object(dict)
    ctx.obj['config'] = config


@cli.command(help='Print the first terms of a sequence')
@sequence_options
@click.option('--len', 'm', type=click.IntRange(min=0), required=True, help='Number of terms')
@click.option('--bounds', is_flag=True, help='Also print the largest digit allowed at each position')
def terms(spec, m, bounds):
    """ Print a_0 ... a_{m-1}, one per line """
    basis = make_basis(spec)
    for i, value in enumerate(basis.prefix(m)):
        click.echo(f'{value} {basis.digit_bound(i)}' if bounds else value)


@cli.command('encode', help='Print the greedy representation of a non-negative integer')
@sequence_options
@click.argument('number', type=click.IntRange(min=0))
def encode_cmd(spec, number):
    """ Print the greedy representation of `number` """
    click.echo(str(encode(make_basis(spec), number)))


@cli.command('decode', help='Print the value of a digit string')
@sequence_options
@click.option('--strict', is_flag=True, help='Fail unless the string is a greedy representation')
@click.argument('digits')
def decode_cmd(spec, strict, digits):
    """ Print the value of `digits`, a string written most significant digit first

    Exits with status 4 under `--strict` when the string is not a greedy representation, and with status 3 when a
    digit exceeds its bound.
    """
    basis = make_basis(spec)
    try:
        string = DigitString.from_text(digits, spec.tag)
    except ValueError as err:
        raise click.BadParameter(str(err), param_hint='DIGITS')

    # The prefix-sum condition implies every digit bound, so strict mode reports it first
    if strict and not is_valid(basis, string):
        fail(f'{string} is not a valid representation in {spec.tag}', ExitCode.STRICT_INVALID)

    try:
        click.echo(decode(basis, string))
    except DigitOutOfRangeError as err:
        fail(err, ExitCode.BAD_DIGIT)


@cli.command('list', help='List the padded representations of 0 ... a_m - 1')
@sequence_options
@guard_options
@click.option('--len', 'm', type=click.IntRange(min=0), required=True, help='Length of the strings')
@click.option('--json', 'as_json', is_flag=True, help='Print a JSON document')
def list_cmd(spec, settings, m, as_json):
    """ Print the language of length m in increasing order of value """
    with size_guarded():
        language = language_by_counting(make_basis(spec), m, settings)
    output(language, 'strings', {'sequence': spec.tag, 'm': m}, as_json)


def checked(items, distance, code_name):
    """ Yield items, failing with the self-check exit code when `distance` of consecutive items is not 1 """
    previous = None
    for item in items:
        if previous is not None and distance(previous, item) != 1:
            fail(f'{code_name} check failed between {previous} and {item}', ExitCode.SELF_CHECK_FAILED)
        previous = item
        yield item


@cli.command(help='Stream a Gray code: 1^k-avoiding strings for kbonacci, the reflected binary code for pow2')
@sequence_options
@guard_options
@click.option('--len', 'm', type=click.IntRange(min=0), required=True, help='Length of the strings')
@click.option('--check', is_flag=True, help='Verify consecutive strings differ in exactly one digit')
@click.option('--json', 'as_json', is_flag=True, help='Print a JSON document')
def gray(spec, settings, m, check, as_json):
    """ Stream the Gray code of length m without holding it in memory """
    if spec.kind is SequenceKind.KBONACCI:
        cursor = gray_language(spec.k, m)
    elif spec.kind is SequenceKind.POWERS_OF_TWO:
        cursor = brgc_cursor(m)
    else:
        raise click.UsageError(f'No Gray code is available for {spec.tag}, use kbonacci or pow2')

    with size_guarded():
        settings.guard(make_basis(spec).term(m), f'strings of {spec.tag} of length {m}')
    items = checked(cursor, hamming, 'Hamming distance') if check else cursor
    output(items, 'strings', {'sequence': spec.tag, 'm': m}, as_json)


@cli.command(help='List the permutations avoiding 321, 312 and 23...(k+1)1')
@guard_options
@click.option('--k', 'k', type=click.IntRange(min=2), required=True, help='Pattern parameter, at least 2')
@click.option('--len', 'm', type=click.IntRange(min=0), required=True, help='Length of the permutations')
@click.option('--gray', 'in_gray_order', is_flag=True, help='List in the adjacent-transposition Gray code order')
@click.option('--check', is_flag=True, help='With --gray, verify consecutive permutations differ by an adjacent swap')
@click.option('--strings', 'with_strings', is_flag=True, help='Append the inversion array of each permutation')
@click.option('--json', 'as_json', is_flag=True, help='Print a JSON document')
def perms(settings, k, m, in_gray_order, check, with_strings, as_json):
    """ List the class of length m, sorted or in Gray code order, optionally with inversion arrays """
    if check and not in_gray_order:
        raise click.UsageError('--check needs --gray')

    with size_guarded():
        if in_gray_order:
            settings.guard(class_size(k, m), f'permutations of length {m}')
            items = gray_perms_cursor(k, m)
            if check:
                items = checked(items, lambda a, b: 0 if adjacent_transposition_delta(a, b) is None else 1,
                                'Adjacent transposition')
        else:
            items = sorted(perm_set(k, m, settings))

    if with_strings:
        items = ((perm, string_from_perm(perm)) for perm in items)
    output(items, 'permutations', {'k': k, 'm': m}, as_json)


@cli.command(help='Compare constructions with brute-force oracles; exit 1 on any disagreement')
@sequence_options
@guard_options
@click.option('--max-len', type=click.IntRange(min=0), required=True, help='Check all lengths up to this one')
@click.argument('suite', type=click.Choice([*SUITES, 'all']))
def verify(spec, settings, max_len, suite):
    """ Run the oracle suites for every length up to `max_len` and print one report per check """
    make_basis(spec)
    try:
        with size_guarded():
            reports = run_suite(suite, spec, max_len, settings)
    except ValueError as err:
        raise click.UsageError(str(err))

    for report in reports:
        click.echo(str(report))
    if not all(report.agrees for report in reports):
        fail('Verification failed', ExitCode.VERIFICATION_FAILED)


if __name__ == '__main__':
    cli()
