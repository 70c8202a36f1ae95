"""Nudge a finished video toward its references with a few reward steps.

Run demo 02 first: it leaves a customized checkpoint in ``demo_out/``. Each
iteration re-noises the clean latents to level 1, scores the predicted clean
video against the subject in latent and pixel space, steps along the reward
gradient and denoises again. The reward table printed at the end should climb.

    python demos/03_reward_refinement.py [data_dir] [subject_id]
"""
import sys
from pathlib import Path

from ct2v.harness import ENCODER_CKPT, save_frames, schedule_of
from ct2v.customization import load_reference_set
from ct2v.denoiser import load_checkpoint
from ct2v.proxy import load_encoder
from ct2v.stpm import StpmOptions, sample_with_stpm
from ct2v.ttro import TTROConfig, rewards_table, ttro_loop
from ct2v import codec

data = Path(sys.argv[1] if len(sys.argv) > 1 else "data")
sid = sys.argv[2] if len(sys.argv) > 2 else "subject_00"
out = Path("demo_out")

model = load_checkpoint(out / f"{sid}.ckpt").eval()
refs = load_reference_set(data, sid)
sched = schedule_of(model)
prompt = model.encode(f"a <S*> {refs.class_word} downward moss")

res = sample_with_stpm(prompt, model, sched, seed=5, options=StpmOptions(frames=8))
z, reports = ttro_loop(res.latents, res.reference_latent, refs, model, sched, prompt,
                       load_encoder(data / ENCODER_CKPT), TTROConfig(iters=5, scene="moss"))

for row in rewards_table(reports):
    print(f"iteration {row['iteration']}: R_lat {row['r_lat']:.4f}  R_pixel {row['r_pixel']:.4f}  "
          f"|grad| {row['grad_norm']:.3g}")
save_frames(res.frames, out / "before_ttro.png")
save_frames(codec.decode(z.frames), out / "after_ttro.png")
print(f"strips written to {out}/before_ttro.png and {out}/after_ttro.png")
