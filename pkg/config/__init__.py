from .config import config, Config, RunConfig, parse_rational

__all__ = ['config', 'Config', 'RunConfig', 'parse_rational']
