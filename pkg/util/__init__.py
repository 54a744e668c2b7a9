from .args import Argument, load_args
