__version__ = "v2024.05"

# +
import torch

torch.set_default_dtype(torch.double)
