"""Teach the toy model one subject, then watch propagation keep it stable.

Needs the benchmark corpus from ``ct2v gen-data --config configs/ablation.json``
(written to ``data/``). The subject is learned in two stages: first the
``<S*>`` embedding, then a short weight fine-tune. One prompt is then sampled
twice from the same seed, once plainly and once with structure and texture
propagation from the reference frame. Both strips land in ``demo_out/``.

    python demos/02_customize_and_propagate.py [data_dir] [subject_id]
"""
import sys
from pathlib import Path

from ct2v.harness import BASE_CKPT, ENCODER_CKPT, customize_subject, evaluate, save_frames, schedule_of
from ct2v.customization import TrainConfig, load_reference_set
from ct2v.denoiser import load_checkpoint
from ct2v.proxy import load_encoder
from ct2v.stpm import StpmOptions, sample_with_stpm
from ct2v.synthetic import BenchmarkPrompt

data = Path(sys.argv[1] if len(sys.argv) > 1 else "data")
sid = sys.argv[2] if len(sys.argv) > 2 else "subject_00"
out = Path("demo_out")
out.mkdir(exist_ok=True)

base = load_checkpoint(data / BASE_CKPT)
refs = load_reference_set(data, sid)
print(f"{sid}: a {refs.class_word} with {refs.images.shape[0]} reference images")

model, info = customize_subject(data, sid, base, TrainConfig(), out / f"{sid}.ckpt")
model.eval()
print(f"customized in {info['seconds']:.1f}s")

bp = BenchmarkPrompt("rightward", "sand")
text = f"a <S*> {refs.class_word} {bp.motion} {bp.scene}"
encoder = load_encoder(data / ENCODER_CKPT)
sched = schedule_of(model)
prompt = model.encode(text)

for label, on in (("plain", False), ("propagated", True)):
    res = sample_with_stpm(prompt, model, sched, seed=3, options=StpmOptions(spm=on, tpm=on, frames=8))
    save_frames(res.frames, out / f"{label}.png")
    score = evaluate(res.frames, refs, bp, encoder)
    print(f"{label:<11} proxy-I {score.proxy_i:.3f}  proxy-T {score.proxy_t:.3f}  "
          f"smoothness {score.smoothness:.3f}  -> {out / (label + '.png')}")
