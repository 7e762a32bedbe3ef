import psutil
import arrow
import json


class Report:
    def __init__(self, lab):
        self.lab = lab

        self.d = lab.d

    def process_stats(self):
        proc = psutil.Process()
        with proc.oneshot():
            mem_usage = proc.memory_full_info().uss
            threads = proc.num_threads()

        return {'memory_mb': round(mem_usage / 1000000, 2), 'threads': threads}

    def build(self, cfg, payload):
        report = {'mode': cfg.mode, 'config': cfg.echo()}
        report.update(payload)
        report['verdict'] = bool(payload['verdict'])

        if not cfg.deterministic:
            finished = arrow.utcnow()
            report['timing'] = {
                'started': self.d.start_time.isoformat(),
                'finished': finished.isoformat(),
                'seconds': round((finished - self.d.start_time).total_seconds(), 3),
            }
            report['process'] = self.process_stats()

        return report

    def emit(self, cfg, payload):
        report = self.build(cfg, payload)
        text = json.dumps(report, indent=2, sort_keys=True)

        if cfg.output:
            with open(cfg.output, 'w', encoding='utf8') as f:
                f.write(text + '\n')
            self.lab.logger.info(f'report written to {cfg.output}')
        else:
            print(text)

        return report


def setup(lab):
    lab.add_cog(Report(lab))
