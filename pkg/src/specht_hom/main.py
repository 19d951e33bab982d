"""Homomorphisms from integral Specht modules to signed Young permutation modules"""

import logging
import sys

from specht_hom import cli, impl
from specht_hom.exceptions import CheckFailedError, SpechtHomError
from specht_hom.modules import set_log_level

set_log_level(logging.WARNING)

main_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def main(argv: list[str] | None = None) -> int:
    """Main function.

    Returns:
        0 on success, 1 if a verification check failed, 2 on invalid input.
    """
    try:
        cmd, output, request = cli.check_args(argv)
        text = impl.run_cmd(cmd, request, output)
    except CheckFailedError as e:
        print(e.output)
        main_logger.error("%s", e)
        return EXIT_CHECK_FAILED
    except (SpechtHomError, ValueError, FileNotFoundError) as e:
        main_logger.error("%s", e)
        return EXIT_USAGE
    print(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
