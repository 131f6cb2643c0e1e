import logging
import os
from typing import Optional


class RunLogger:
    """
    Logging for one CLI invocation.
    Messages go to stderr so that stdout only carries results.
    """

    def __init__(
        self,
        verbose: bool = False,
        log_file: Optional[str] = None,
        output_dir: str = "./",
        stream_name: str = "freeshift",
    ) -> None:
        """
        Args:
            `verbose`: Whether to log debug messages.
            `log_file`: Name of the file logger, no file logging if `None`.
            `output_dir`: Output directory for log file.
            `stream_name`: Name of the stream logger.
        """
        self.level = logging.DEBUG if verbose else logging.INFO
        self.output_dir = output_dir
        self.log_file = log_file
        self.stream_name = stream_name
        self.s = self.get_stream_logger()  # stream logger
        if log_file is not None:
            self.f = self.get_file_logger()  # file logger
        else:
            self.f = NoOp()

    def get_file_logger(self) -> logging.Logger:
        name = os.path.basename(self.log_file).split(".")[0]
        file_logger = logging.getLogger(f"{self.stream_name}.{name}")
        file_logger.setLevel(logging.DEBUG)
        file_logger.propagate = False
        datefmt = "%Y-%m-%d %H:%M:%S"
        formatter = logging.Formatter(
            "%(asctime)s - %(levelname)s - %(message)s",
            datefmt=datefmt,
        )
        log_file = os.path.join(self.output_dir, self.log_file)
        file_handler = logging.FileHandler(log_file, mode="w")
        file_handler.setFormatter(formatter)
        file_logger.handlers.clear()
        file_logger.addHandler(file_handler)
        return file_logger

    def get_stream_logger(self) -> logging.Logger:
        stream_logger = logging.getLogger(self.stream_name)
        stream_logger.setLevel(self.level)
        stream_logger.propagate = False
        formatter = logging.Formatter("%(levelname)s - %(message)s")
        # handler streams to sys.stderr by default
        stream_handler = logging.StreamHandler()
        stream_handler.setFormatter(formatter)
        # repeated invocations in one process must not stack handlers
        stream_logger.handlers.clear()
        stream_logger.addHandler(stream_handler)
        return stream_logger

    def info(self, msg: str) -> None:
        self.s.info(msg)
        self.f.info(msg)

    def debug(self, msg: str) -> None:
        self.s.debug(msg)
        self.f.debug(msg)

    def warning(self, msg: str) -> None:
        self.s.warning(msg)
        self.f.warning(msg)

    def error(self, msg: str) -> None:
        self.s.error(msg)
        self.f.error(msg)


# no_op method/object that accept every signature
class NoOp:
    def __getattr__(self, *args):
        def no_op(*args, **kwargs):
            pass

        return no_op
