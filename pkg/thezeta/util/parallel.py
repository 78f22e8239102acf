# +
import functools

import torch

import thezeta.distributed as dist


def mpi_init():
    """returns mpi WORLD (None without an mpi backend)"""
    if dist.available and not dist.is_initialized():
        dist.init_process_group("mpi")
    return dist.group.WORLD


def rank():
    if dist.is_initialized():
        return dist.get_rank()
    else:
        return 0


def world_size():
    if dist.is_initialized():
        return dist.get_world_size()
    else:
        return 1


def if_master(func):
    """runs func on rank 0 only; other ranks get None"""

    @functools.wraps(func)
    def _func(*args, **kwargs):
        if rank() == 0:
            return func(*args, **kwargs)
        return None

    return _func


def balance_work(size, workers):
    # sizes
    a = size // workers
    b = size % workers
    work = [a + 1 if j < b else a for j in range(workers)]
    # indices
    indices = []
    start = 0
    for chunk in work:
        indices += [(start, start + chunk)]
        start = start + chunk
    return indices


def index_gather(x, index, size):
    """
    x: rows computed by this process, placed at index (dim 0) of
    a zero tensor with size rows; the sum over processes is returned.
    """
    _size = [s for s in x.size()]
    _size[0] = size
    _x = torch.zeros(*_size, dtype=x.dtype)
    _x[index] = x
    if world_size() > 1:
        dist.all_reduce(_x)
    return _x


def test_balance_work():
    for size in [0, 1, 7, 36]:
        for workers in [1, 2, 5]:
            indices = balance_work(size, workers)
            assert len(indices) == workers
            assert indices[0][0] == 0 and indices[-1][1] == size
            chunks = [b - a for a, b in indices]
            assert max(chunks) - min(chunks) <= 1


def test_index_gather():
    x = torch.arange(6.0).view(3, 2)
    y = index_gather(x, torch.tensor([1, 2, 4]), 5)
    assert y.size() == torch.Size([5, 2])
    assert (y[[1, 2, 4]] == x).all()
    assert (y[[0, 3]] == 0).all()


def test_if_master():
    @if_master
    def answer():
        return 42

    assert answer() == 42


if __name__ == "__main__":
    test_balance_work()
    test_index_gather()
    test_if_master()
