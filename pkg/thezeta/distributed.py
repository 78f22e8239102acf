# +
import torch


class _serial:
    """stands in when neither torch nor mpi4py provide mpi"""

    class group:
        WORLD = None

    class ReduceOp:
        SUM = "sum"

    @staticmethod
    def is_initialized():
        return False

    @staticmethod
    def init_process_group(arg="mpi"):
        raise RuntimeError("mpi is not available (install mpi4py)")

    @staticmethod
    def get_world_size(group=None):
        return 1

    @staticmethod
    def get_rank(group=None):
        return 0

    @staticmethod
    def all_reduce(data, op=None):
        pass


if torch.distributed.is_available() and torch.distributed.is_mpi_available():
    import torch.distributed as _dist
else:
    try:
        import thezeta._mpi4py as _dist
    except ImportError:
        _dist = _serial

available = _dist is not _serial

group = _dist.group
is_initialized = _dist.is_initialized
init_process_group = _dist.init_process_group
get_world_size = _dist.get_world_size
get_rank = _dist.get_rank
all_reduce = _dist.all_reduce
ReduceOp = _dist.ReduceOp
