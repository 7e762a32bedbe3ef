from util.coinvariants import general_factorization_smoke


class Smoke:
    def __init__(self, lab):
        self.lab = lab

        self.d = lab.d

    def smoke(self, cfg):
        weyl = cfg.weyl()
        result = general_factorization_smoke(weyl, cfg.window, cfg.max_depth, cfg.fuel, workers=cfg.workers)

        self.lab.logger.info(f'smoke at depth {cfg.window}: dim_trig {result.dim_trig}, blocks sum to {result.total}')

        return {
            'depth': cfg.window,
            'dim_trig': result.dim_trig,
            'total': result.total,
            'blocks': [{'lam': str(b.lam), 'mu': str(b.mu), 'raw_dim': b.raw_dim, 'dim': b.dim} for b in result.blocks],
            'verdict': result.verdict,
        }


def setup(lab):
    cog = Smoke(lab)
    lab.add_cog(cog)
    lab.add_command('smoke', cog.smoke, 'truncated check with universal Verma quotients at 0 and infinity')
