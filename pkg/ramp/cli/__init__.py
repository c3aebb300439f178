# coding: utf-8
from ramp.cli.config import RunConfig
from ramp.cli.config import load_run_config
from ramp.cli.main import main


__all__ = ['RunConfig', 'load_run_config', 'main']
