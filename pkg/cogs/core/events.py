from util.errors import (CyclotomicZeroDivision, DepthOverflow, FuelExhausted, InvalidConfig, InvalidModuleError,
                         SectionError)
import traceback


class Events:
    def __init__(self, lab):
        self.lab = lab

        self.d = lab.d
        self.exit_codes = lab.d.exit_codes

    def debug_error(self, e):
        traceback_text = ''.join(traceback.format_exception(type(e), e, e.__traceback__, self.d.traceback_depth))
        self.lab.logger.error(f'{type(e).__name__}: {e}\n\n{traceback_text}')

    def on_command_completion(self, report):
        seconds = report.get('timing', {}).get('seconds')
        took = '' if seconds is None else f' in {seconds}s'

        if report['verdict']:
            self.lab.logger.info(f'\u001b[32;1mVERDICT TRUE\u001b[0m [{report["mode"]}]{took}')
            return self.exit_codes.ok

        self.lab.logger.warning(f'\u001b[31;1mVERDICT FALSE\u001b[0m [{report["mode"]}]{took}')
        return self.exit_codes.verdict_false

    def on_command_error(self, e):
        if isinstance(e, InvalidConfig):
            for err in e.errors:
                self.lab.logger.error(f'invalid config: {err}')
            return self.exit_codes.invalid_config
        elif isinstance(e, DepthOverflow):
            self.lab.logger.error(f'depth overflow after {e.used} steps: {e} (raise --max-depth)')
            return self.exit_codes.fuel_exhausted
        elif isinstance(e, FuelExhausted):
            self.lab.logger.error(f'fuel exhausted after {e.used} steps: {e} (raise --fuel)')
            return self.exit_codes.fuel_exhausted
        elif isinstance(e, (InvalidModuleError, SectionError)):
            self.lab.logger.error(f'invalid input: {e}')
            return self.exit_codes.invalid_config
        elif isinstance(e, CyclotomicZeroDivision):
            self.lab.logger.error(f'division by zero in Q(e): {e}')
            self.debug_error(e)
            return self.exit_codes.unknown_error
        else:
            self.debug_error(e)
            return self.exit_codes.unknown_error


def setup(lab):
    lab.add_cog(Events(lab))
