from util.properties import run_suites
import random


class Properties:
    def __init__(self, lab):
        self.lab = lab

        self.d = lab.d

    def table(self, results):
        width = max(len(r.name) for r in results)
        lines = [f'{"suite".ljust(width)}  checks  violations']
        lines += [f'{r.name.ljust(width)}  {str(r.checks).rjust(6)}  {str(r.violations).rjust(10)}' for r in results]
        return '\n'.join(lines)

    def properties(self, cfg):
        results = run_suites(cfg.n, cfg.points, cfg.reps, cfg.level, rng=random.Random(cfg.seed))

        self.lab.logger.info('property suites:\n' + self.table(results))
        for r in results:
            for detail in r.details:
                self.lab.logger.warning(f'{r.name}: violated {detail}')

        return {
            'suites': [{'name': r.name, 'checks': r.checks, 'violations': r.violations, 'details': r.details}
                       for r in results],
            'verdict': all(r.violations == 0 for r in results),
        }


def setup(lab):
    cog = Properties(lab)
    lab.add_cog(cog)
    lab.add_command('properties', cog.properties, 'run the invariant suites of every module')
