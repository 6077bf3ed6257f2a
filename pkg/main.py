import argparse
import sys

import config
from models.experiment import KINDS
from util.errors import ConfigError


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dpr",
        description=f"{config.APP_NAME}: phase retrieval under a generative ReLU prior",
    )
    parser.add_argument("command", choices=KINDS, help="experiment to run")
    parser.add_argument("--config", required=True, help="JSON experiment document")
    parser.add_argument("--seed", type=int, default=None, help="override the master seed")
    parser.add_argument("--out", default=None, help="override the output directory")
    parser.add_argument("--workers", type=int, default=None, help="trial-level worker threads")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)

    # Imported late so `--help` works without touching the log directory
    from harness.runner import EXIT_CONFIG, load_config, run
    from util.logger import logger

    try:
        cfg = load_config(args.config)
        if cfg.kind != args.command:
            raise ConfigError(f"Config describes '{cfg.kind}' but the command is '{args.command}'")
        cfg = cfg.merge_overrides(seed=args.seed, output=args.out, workers=args.workers)
    except ConfigError as e:
        logger.error(f"Invalid configuration: {e}")
        return EXIT_CONFIG
    return run(cfg)


if __name__ == '__main__':
    sys.exit(main())
