"""How frames find each other: nearest-cosine matching on feature grids.

Two feature grids are built where the second is the first shifted two cells
to the right. The matching flow should recover that shift everywhere except
the two columns that scroll in from the edge and have no true source.

    python demos/01_matching_flow.py
"""
import torch

from ct2v.correspondence import match, warp

torch.manual_seed(0)
h, w, d = 6, 8, 16
source = torch.randn(h, w, d)

# The target sees the same content moved right by two cells. The two new
# columns on the left are fresh content.
target = torch.cat([torch.randn(h, 2, d), source[:, :-2]], dim=1)

flow = match(source, target)
dx = flow.displacement[..., 1]
print("horizontal displacement (target -> source), one row per grid row:")
print(dx)
print("columns 2.. all point two cells left:", bool((dx[:, 2:] == -2).all()))

# Warping the source by the flow rebuilds the target wherever a true source exists.
rebuilt = warp(source, flow)
err = (rebuilt[:, 2:] - target[:, 2:]).abs().max().item()
print(f"max warp error on matched columns: {err:.2e}")
