import re

ROOT = re.compile(r'e\((-?\d+)\)')
INTEGER = re.compile(r'\d+')


def split_top(s, op):
    # split at op only outside parentheses
    parts, depth, start = [], 0, 0

    for i, ch in enumerate(s):
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
            if depth < 0:
                raise ValueError(f'unbalanced parentheses in {s!r}')
        elif ch == op and depth == 0:
            if op in '+-' and i and s[i - 1] in '*/^+-':
                continue  # a sign, not an operator
            parts.append(s[start:i])
            start = i + 1

    if depth != 0:
        raise ValueError(f'unbalanced parentheses in {s!r}')

    parts.append(s[start:])
    return parts


def add(field, addends):
    # a leading '+' leaves an empty first part
    first = addends.pop(0)
    total = parse(first, field) if first else field.zero

    for addend in addends:
        total += parse(addend, field)

    return total


def subtract(field, subtrahends):
    # a leading '-' leaves an empty first part
    first = subtrahends.pop(0)
    difference = parse(first, field) if first else field.zero

    for subtrahend in subtrahends:
        difference -= parse(subtrahend, field)

    return difference


def multiply(field, multiplicands):
    product = field.one

    for multiplicand in multiplicands:
        product *= parse(multiplicand, field)

    return product


def divide(field, divisors):
    quotient = parse(divisors.pop(0), field)

    for divisor in divisors:
        quotient /= parse(divisor, field)

    return quotient


def integer_exponent(value):
    q = value.to_fraction()
    if q.denominator != 1:
        raise ValueError(f'exponent must be an integer, got {q}')
    return int(q)


def exponentiate(field, indexes):
    # right associative, a^b^c = a^(b^c)
    power = parse(indexes.pop(), field)

    while indexes:
        power = parse(indexes.pop(), field) ** integer_exponent(power)

    return power


def parse(s, field):
    """Parse a cyclotomic literal such as '1/2', 'e(1)' or '(1 - e(2))/3' into field."""

    s = str(s).replace(' ', '').replace('**', '^')
    if not s:
        raise ValueError('empty literal')

    # resolved bottom up, so the loosest binding operator is split first
    split = split_top(s, '+')
    if len(split) > 1: return add(field, split)

    split = split_top(s, '-')
    if len(split) > 1: return subtract(field, split)

    split = split_top(s, '*')
    if len(split) > 1: return multiply(field, split)

    split = split_top(s, '/')
    if len(split) > 1: return divide(field, split)

    split = split_top(s, '^')
    if len(split) > 1: return exponentiate(field, split)

    if s.startswith('(') and s.endswith(')'):
        return parse(s[1:-1], field)

    match = ROOT.fullmatch(s)
    if match:
        return field.eps(int(match.group(1)))

    if INTEGER.fullmatch(s):
        return field(int(s))

    raise ValueError(f'malformed cyclotomic literal: {s!r}')
