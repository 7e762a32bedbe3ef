from util.coinvariants import factorization_report


class Factorize:
    def __init__(self, lab):
        self.lab = lab

        self.d = lab.d

    def component_row(self, c):
        return {
            'weight': str(c.weight),
            'diagonal': [str(x) for x in c.weight.to_diagonal()],
            'dim': c.dim,
            'multiplicity': c.multiplicity,
            'raw_dim': c.raw_dim,
            'certified': c.certified,
        }

    def factorize(self, cfg):
        weyl = cfg.weyl()
        self.lab.logger.info(f'dim V = {weyl.dim}, window {cfg.window}, max depth {cfg.max_depth}')

        report = factorization_report(weyl, cfg.window, cfg.max_depth, cfg.fuel, cfg.off_diagonal, cfg.workers, cfg.order)

        for c in report.components:
            self.lab.logger.info(f'component {c.weight}: dim {c.dim}, multiplicity {c.multiplicity}')

        return {
            'dim_trig': report.dim_trig,
            'trig_certified': report.trig.certified,
            'components': [self.component_row(c) for c in report.components],
            'off_diagonal': [
                {'lam': str(r.lam), 'mu': str(r.mu), 'raw_dim': r.raw_dim, 'dim': r.dim} for r in report.off_diagonal
            ],
            'total': report.total,
            'verdict': report.verdict,
            'fuel': {
                'trig': report.trig.fuel,
                'components': [c.fuel for c in report.components],
                'off_diagonal': sum(r.fuel for r in report.off_diagonal),
            },
            'digests': {
                'trig': report.trig.digest,
                'components': [c.digest for c in report.components],
            },
        }


def setup(lab):
    cog = Factorize(lab)
    lab.add_cog(cog)
    lab.add_command('factorize', cog.factorize, 'compare CC_trig with the sum of orbifold weight components')
