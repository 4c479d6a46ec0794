"""
Replaying a problem corpus
==========================

A corpus is a JSON document of problems with the answers a scribe
recorded. Replaying recomputes every problem exactly and files a verdict
per problem; copying slips surface as exact deviations, never as noise.
"""

import json

from scribal import corpus

# The bundled starter corpus holds one reconstructed problem per category,
# including one with a deliberately miscopied answer.
problems = corpus.load_starter_corpus()
print(f"loaded {len(problems)} problems: "
      f"{sorted({p.category for p in problems})}\n")

verdicts = corpus.replay_all(problems)
print(corpus.render_report(verdicts, "text"))

# The slip: dropping the fraction terms from 16 + 1/2 + 1/8 leaves 16,
# exactly 5/8 short. The replay pins the deviation as a rational.
slip = next(v for v in verdicts if v.status == corpus.SCRIBAL_ERROR)
print(f"the slip: {slip.problem_id}: wrote {slip.scribal_value}, "
      f"engine says {slip.engine_value}, deviation {slip.deviation}")

# Corrupt another answer and watch it get flagged.
document = json.loads(corpus.starter_corpus_text())
row = next(p for p in document["problems"] if p["id"] == "ladder-of-seven")
row["scribal_answer"] = "19608"
tampered = corpus.load_corpus(json.dumps(document))
verdict = next(v for v in corpus.replay_all(tampered) if v.problem_id == "ladder-of-seven")
print(f"\ntampered ladder total: status {verdict.status}, deviation {verdict.deviation}")

# Reports are deterministic: same corpus in, byte-identical report out.
again = corpus.render_report(corpus.replay_all(corpus.load_starter_corpus()), "json")
assert again == corpus.render_report(corpus.replay_all(corpus.load_starter_corpus()), "json")
print("\nreports are byte-identical across runs")
