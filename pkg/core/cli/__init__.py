from .order_type_cli import main, build_parser, load_run_config, run
