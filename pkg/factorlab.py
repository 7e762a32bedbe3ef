if __import__('os').name == 'nt':
    import colorama; colorama.init()
import classyjson as cj
import importlib
import argparse
import logging
import arrow
import sys
import os

# set up basic logging
logging.basicConfig(level=logging.INFO, format='%(levelname)s:%(name)s: %(message)s')
logger = logging.getLogger('main')

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')


class Lab:
    def __init__(self, d):
        self.d = d  # dot accessible defaults from data/defaults.json
        self.logger = logger

        self.cogs = {}
        self.commands = {}

        self.parser = argparse.ArgumentParser(
            prog='factorlab',
            description='exact coinvariants and factorisation checks for the degenerate twisted WZW model'
        )
        self.subparsers = self.parser.add_subparsers(dest='mode')
        self.subparsers.required = True

    def add_cog(self, cog):
        self.cogs[type(cog).__name__] = cog

    def get_cog(self, name):
        return self.cogs.get(name)

    def load_extension(self, name):
        importlib.import_module(name).setup(self)

    def add_command(self, name, callback, help_text):
        sub = self.subparsers.add_parser(name, help=help_text)
        self.get_cog('Config').add_arguments(sub)
        self.commands[name] = callback

    def run_check(self, cfg):
        self.logger.info(f'running {cfg.mode} for N={cfg.n}, L={len(cfg.points)}, reps={",".join(cfg.reps)}')
        return self.get_cog('Report').emit(cfg, self.commands[cfg.mode](cfg))

    def run(self, argv=None):
        self.d.start_time = arrow.utcnow()
        events = self.get_cog('Events')

        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:  # argparse already printed its usage message
            return e.code if isinstance(e.code, int) else events.exit_codes.invalid_config

        try:
            report = self.run_check(self.get_cog('Config').parse_config(args))
        except Exception as e:
            return events.on_command_error(e)

        return events.on_command_completion(report)


def make_lab():
    logger.info('loading factorlab defaults from data/defaults.json...')
    with open(os.path.join(DATA_DIR, 'defaults.json'), 'r', encoding='utf8') as d:
        lab = Lab(cj.load(d))  # cj turns the json into nested dot accessible dicts

    lab.cog_list = [  # config has to load first, the commands register their flags through it
        'cogs.core.config',
        'cogs.core.events',
        'cogs.core.report',
        'cogs.cmds.factorize',
        'cogs.cmds.properties',
        'cogs.cmds.smoke',
    ]

    for cog in lab.cog_list:
        logger.debug(f'loading extension: {cog}')
        lab.load_extension(cog)

    return lab


def main(argv=None):
    return make_lab().run(argv)


if __name__ == '__main__':
    sys.exit(main())
