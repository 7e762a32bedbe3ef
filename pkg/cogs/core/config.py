from util.coinvariants import WeylInsertion
from util.errors import InvalidConfig, InvalidModuleError, SectionError
from util.liealg import parse_rep, sl
from util.misc import recursive_update, split_list
from util.sections import Curve
from util.math import parse
from fractions import Fraction
import classyjson as cj
import logging


class RunConfig:
    def __init__(self, raw, n, level, points, reps, modules):
        self.raw = raw

        self.mode = raw.mode
        self.n = n
        self.level = level
        self.point_literals = [str(p) for p in raw.points]
        self.points = points
        self.reps = reps
        self.modules = modules

        self.max_depth = raw.max_depth
        self.window = raw.window
        self.fuel = raw.fuel
        self.pole_cap = raw.pole_cap
        self.off_diagonal = bool(raw.off_diagonal)
        self.order = raw.order
        self.seed = raw.seed
        self.deterministic = bool(raw.deterministic)
        self.workers = raw.workers
        self.output = raw.output

        self.gauge = sl(n)
        self.curve = Curve(self.gauge, points, self.pole_cap)

    def __repr__(self):
        return f'RunConfig({self.mode}, N={self.n}, points={self.point_literals}, reps={self.reps})'

    def weyl(self):
        return WeylInsertion(self.curve, self.modules, self.level)

    def echo(self):
        return {
            'mode': self.mode,
            'n': self.n,
            'level': str(self.level),
            'points': self.point_literals,
            'reps': self.reps,
            'max_depth': self.max_depth,
            'window': self.window,
            'fuel': self.fuel,
            'pole_cap': self.pole_cap,
            'off_diagonal': self.off_diagonal,
            'order': self.order,
            'seed': self.seed,
        }


class Config:
    def __init__(self, lab):
        self.lab = lab

        self.d = lab.d

    def add_arguments(self, parser):
        # every default is None so that unset flags do not mask data/defaults.json
        parser.add_argument('--n', type=int, help='order of the twist, sl_N')
        parser.add_argument('--level', help='level k, an exact rational such as 1 or 3/2')
        parser.add_argument('--points', type=split_list, help='comma separated marked points, e.g. 1,2 or 1/2,e(1)')
        parser.add_argument('--reps', type=split_list, help='comma separated modules per point: def, dual, triv, def*dual ...')
        parser.add_argument('--max-depth', dest='max_depth', type=int, help='cap on the depth of PBW monomials')
        parser.add_argument('--window', type=int, help='depth of the relation window')
        parser.add_argument('--fuel', type=int, help='cap on rewriting steps')
        parser.add_argument('--pole-cap', dest='pole_cap', type=int, help='largest pole order a section may carry')
        parser.add_argument('--off-diagonal', dest='off_diagonal', action='store_const', const=True, help='also compute the blocks with distinct weights')
        parser.add_argument('--order', help='PBW order used by the engine: depth or site')
        parser.add_argument('--seed', type=int, help='seed for the randomised property suites')
        parser.add_argument('--deterministic', action='store_const', const=True, help='leave timing and process stats out of the report')
        parser.add_argument('--workers', type=int, help='threads used for independent weight components')
        parser.add_argument('--config', help='json run configuration, overrides flags')
        parser.add_argument('--output', '--out', '-o', help='write the report here instead of stdout')
        parser.add_argument('--quiet', '-q', action='store_true')
        parser.add_argument('--verbose', '-v', action='store_true')

    def layer(self, args):
        merged = recursive_update(cj.classify({}), self.d.defaults)

        flags = {k: v for k, v in vars(args).items() if v is not None and k not in ('config', 'quiet', 'verbose', 'mode')}
        merged = recursive_update(merged, flags)

        if args.config:
            try:
                with open(args.config, 'r', encoding='utf8') as f:
                    merged = recursive_update(merged, cj.load(f))
            except (OSError, ValueError) as e:
                raise InvalidConfig([f'cannot read config file {args.config}: {e}'])

        merged['mode'] = args.mode
        return merged

    def parse_config(self, args):
        if args.quiet:
            logging.getLogger().setLevel(logging.WARNING)
        elif args.verbose:
            logging.getLogger().setLevel(logging.DEBUG)

        raw = self.layer(args)
        errors = []

        n = raw.n
        if not isinstance(n, int) or n < 2:
            errors.append(f'n must be an integer >= 2, got {n!r}')
            n = None

        try:
            level = Fraction(str(raw.level))
        except (ValueError, ZeroDivisionError):
            errors.append(f'level must be an exact rational, got {raw.level!r}')
            level = None

        if n is not None and level is not None and level == -n:
            errors.append(f'level {level} is critical for sl_{n}')

        for name in ('max_depth', 'window', 'pole_cap', 'workers'):
            value = raw.get(name)
            if not isinstance(value, int) or value < 1:
                errors.append(f'{name} must be a positive integer, got {value!r}')
        if raw.fuel is not None and (not isinstance(raw.fuel, int) or raw.fuel < 1):
            errors.append(f'fuel must be a positive integer or null, got {raw.fuel!r}')
        if isinstance(raw.window, int) and isinstance(raw.max_depth, int) and raw.window > raw.max_depth:
            errors.append(f'window {raw.window} exceeds max_depth {raw.max_depth}')
        if isinstance(raw.window, int) and isinstance(raw.pole_cap, int) and raw.window > raw.pole_cap:
            errors.append(f'window {raw.window} exceeds pole_cap {raw.pole_cap}')
        if raw.order not in self.d.orders:
            errors.append(f'order must be one of {", ".join(self.d.orders)}, got {raw.order!r}')

        points = split_list(raw.points) if isinstance(raw.points, str) else list(raw.points or [])
        reps = split_list(raw.reps) if isinstance(raw.reps, str) else list(raw.reps or [])
        raw['points'] = points

        if not points:
            errors.append('at least one marked point is required')
        if len(points) != len(reps):
            errors.append(f'{len(reps)} reps given for {len(points)} points')

        parsed, modules = [], []

        if n is not None:
            field = sl(n).field

            for i, p in enumerate(points, 1):
                try:
                    parsed.append(parse(p, field))
                except (ValueError, ZeroDivisionError) as e:
                    errors.append(f'point {i}: {e}')
                    parsed.append(None)

            for i, p in enumerate(parsed, 1):
                if p is not None and p.is_zero():
                    errors.append(f'point {i} is zero')

            for i in range(len(parsed)):
                for j in range(i + 1, len(parsed)):
                    x, y = parsed[i], parsed[j]
                    if x is not None and y is not None and x and y and x ** n == y ** n:
                        errors.append(f'points {i + 1} and {j + 1} lie in the same C_{n}-orbit ({x}^{n} = {y}^{n})')

            for i, r in enumerate(reps, 1):
                try:
                    modules.append(parse_rep(sl(n), r))
                except InvalidModuleError as e:
                    errors.append(f'rep {i}: {e}')

        if errors:
            raise InvalidConfig(errors)

        try:
            return RunConfig(raw, n, level, parsed, [str(r) for r in reps], modules)
        except SectionError as e:
            raise InvalidConfig([str(e)])


def setup(lab):
    lab.add_cog(Config(lab))
