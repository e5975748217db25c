#!/usr/bin/env python3
"""Regenerates data/tagger/corpus.txt.

Synthetic scientific-English sentences with gold Penn Treebank tags,
produced from hand-tagged vocabulary and sentence templates. The corpus
is small on purpose: it exists to train and test the bundled tagger, not
to model English.
"""

import random
import sys

NN = """model method algorithm dataset network function bound objective gradient
matrix graph kernel prior posterior likelihood loss error noise signal layer
feature metric score baseline benchmark task domain corpus token sentence
summary document article keyword prompt decoder encoder parser tagger sampler
policy reward regret agent environment estimator variance convergence
inference regression classification optimization evaluation generation
attention embedding representation distribution parameter approach framework
procedure analysis experiment result improvement performance accuracy
proof theorem lemma equation figure table section appendix choice budget""".split()

NNS = """models methods algorithms datasets networks functions bounds objectives
gradients matrices graphs kernels priors posteriors likelihoods losses errors
signals layers features metrics scores baselines benchmarks tasks domains
tokens sentences summaries documents articles keywords prompts decoders
encoders parsers taggers samplers policies rewards regrets agents environments
estimators variances inferences regressions classifications optimizations
evaluations generations attentions embeddings representations distributions
parameters approaches frameworks procedures analyses experiments results
improvements performances accuracies proofs theorems lemmas equations figures
tables sections appendices choices budgets weights""".split()

NNP = """Adam Gauss Newton Thompson Markov Bayes Fourier Lipschitz Pareto Nash
Shannon Turing Gibbs Laplace Cauchy Jacobi Hilbert Banach Sobolev Dirichlet""".split()

JJ = """novel robust efficient sparse dense deep shallow convex smooth stochastic
deterministic optimal linear nonlinear neural statistical empirical
theoretical variational adaptive scalable simple complex strong weak large
small fast slow accurate stable consistent tight loose latent hidden joint
marginal conditional abstractive extractive lexical syntactic semantic
state-of-the-art well-known fine-grained large-scale long-term real-world
greedy exact approximate standard common rare public final""".split()

JJR = "better stronger tighter faster larger smaller simpler weaker looser".split()
JJS = "best strongest tightest fastest largest smallest simplest".split()

VBP_ONLY = """propose present prove evaluate compare analyze study introduce
describe report observe find demonstrate extend investigate combine explore
consider develop apply use measure""".split()

VB_SHARED = """train test improve converge generalize scale hold reduce increase
compute derive show sample learn predict estimate capture remain outperform
match exceed decode parse select focus""".split()

VBZ = """proposes presents shows proves derives evaluates compares outperforms
improves converges achieves exceeds matches reduces increases requires yields
performs generalizes scales holds fails works learns predicts estimates
samples measures captures remains selects focuses""".split()

VBD_SHARED = """proposed derived trained evaluated reported introduced improved
observed measured selected compared analyzed extended combined studied""".split()

VBD_ONLY = "showed found gave took ran built was were".split()

VBN_ONLY = "given shown proven drawn known written chosen done seen held".split()

VBG = """training sampling learning decoding encoding parsing tagging modeling
boosting clustering pruning searching planning reasoning summarizing
generating optimizing improving measuring scaling averaging smoothing""".split()

RB = """quickly significantly empirically consistently strongly weakly often
rarely usually clearly slightly notably jointly however moreover therefore
thus also well further uniformly provably""".split()

IN = "of in on with for over under across between through against from during via than".split()
DT = "the a an this these each every some no".split()
MD = "can may must should will could".split()
CD = [str(n) for n in (2, 3, 4, 5, 6, 7, 8, 10, 12, 16, 20, 32, 50, 64, 100, 128, 200, 500, 1000)]
SYM = "α β γ θ λ ε δ σ μ π ω + = < >".split()
FW_PAIRS = [("ad", "hoc"), ("de", "facto"), ("per", "se")]

def w(word, tag):
    return f"{word}_{tag}"


class Gen:
    def __init__(self, seed):
        self.rng = random.Random(seed)

    def pick(self, items):
        return self.rng.choice(items)

    def np_singular(self):
        det = self.pick(["the", "a", "this", "each", "every"])
        out = [w(det, "DT")]
        if self.rng.random() < 0.55:
            out.append(w(self.pick(JJ), "JJ"))
        if self.rng.random() < 0.2:
            out.append(w(self.pick(NNP), "NNP"))
        out.append(w(self.pick(NN), "NN"))
        return out

    def np_plural(self):
        out = []
        if self.rng.random() < 0.4:
            out.append(w(self.pick(["the", "these", "some"]), "DT"))
        if self.rng.random() < 0.5:
            out.append(w(self.pick(JJ), "JJ"))
        out.append(w(self.pick(NNS), "NNS"))
        return out

    def pp(self):
        prep = self.pick([p for p in IN if p != "than"])
        return [w(prep, "IN")] + (self.np_plural() if self.rng.random() < 0.5
                                  else self.np_singular())

    def sentence(self):
        kind = self.rng.randrange(14)
        s = []
        if kind == 0:
            s += [w("We", "PRP"), w(self.pick(VBP_ONLY), "VBP")]
            s += self.np_singular()
            s += self.pp()
        elif kind == 1:
            s += self.np_singular()
            s += [w(self.pick(VBZ), "VBZ")]
            s += self.np_plural()
            if self.rng.random() < 0.5:
                s += [w("on", "IN"), w(self.pick(CD), "CD"), w(self.pick(NNS), "NNS")]
        elif kind == 2:
            s += [w("Our", "PRP$"), w(self.pick(NN), "NN"), w(self.pick(VBZ), "VBZ")]
            s += [w(self.pick(JJR), "JJR"), w(self.pick(NNS), "NNS")]
            s += [w("than", "IN")] + self.np_singular()
        elif kind == 3:
            s += self.np_plural()
            s += [w("are", "VBP"), w(self.pick(VBD_SHARED + VBN_ONLY), "VBN")]
            s += [w("by", "IN"), w(self.pick(VBG), "VBG")] + self.np_plural()
        elif kind == 4:
            s += self.np_plural() if self.rng.random() < 0.5 else [w("The", "DT"),
                                                                   w(self.pick(NNS), "NNS")]
            s += [w(self.pick(VBD_ONLY[:6] + VBD_SHARED), "VBD")]
            s += [w("that", "IN")] + self.np_singular() + [w(self.pick(VBZ), "VBZ")]
        elif kind == 5:
            s += [w(self.pick(["It", "They"]), "PRP"), w(self.pick(MD), "MD"),
                  w(self.pick(VB_SHARED), "VB")]
            if self.rng.random() < 0.6:
                s += [w(self.pick(RB), "RB")]
        elif kind == 6:
            s += [w(self.pick(VBG), "VBG")] + self.np_plural()
            s += [w(self.pick(VBZ), "VBZ")] + self.np_singular()
        elif kind == 7:
            s += [w("We", "PRP"), w(self.pick(VBP_ONLY), "VBP")]
            s += [w(self.pick(NNP), "NNP"), w(self.pick(NN), "NN")]
            s += self.pp()
        elif kind == 8:
            s += self.np_singular()
            s += [w(",", ","), w("however", "RB"), w(",", ",")]
            s += [w(self.pick(VBZ), "VBZ")] + self.np_plural()
        elif kind == 9:
            first = self.pick(SYM)
            s += [w(first, "SYM"), w("and", "CC"), w(self.pick(SYM), "SYM")]
            s += [w(self.pick(VB_SHARED), "VBP"), w(self.pick(JJ), "JJ")]
        elif kind == 10:
            pair = self.pick(FW_PAIRS)
            s += self.np_singular()
            s += [w("is", "VBZ"), w(pair[0], "FW"), w(pair[1], "FW")]
        elif kind == 11:
            s += [w("They", "PRP"), w("were", "VBD")]
            s += [w(self.pick(VBD_SHARED + VBN_ONLY), "VBN")] + self.pp()
        elif kind == 12:
            s += [w("To", "TO"), w(self.pick(VB_SHARED), "VB")]
            s += self.np_plural()
            s += [w(",", ","), w("we", "PRP"), w(self.pick(VBP_ONLY), "VBP")]
            s += self.np_singular()
        else:
            s += self.np_plural()
            s += [w(self.pick(VB_SHARED), "VBP"), w(self.pick(RB), "RB")]
            if self.rng.random() < 0.4:
                s += [w("and", "CC"), w(self.pick(VB_SHARED), "VBP")]
        if self.rng.random() < 0.12:
            s += [w(":", ":")] + self.np_singular()
        s.append(w(".", "."))
        # Capitalize plain sentence-initial words; symbols stay untouched.
        head, tag = s[0].rsplit("_", 1)
        if head[0].islower() and head[0].isascii():
            s[0] = w(head[0].upper() + head[1:], tag)
        return " ".join(s)


def main():
    out_path = sys.argv[1] if len(sys.argv) > 1 else "data/tagger/corpus.txt"
    gen = Gen(20240817)
    sentences = [gen.sentence() for _ in range(460)]
    with open(out_path, "w", encoding="utf-8") as f:
        for s in sentences:
            f.write(s + "\n")
    tokens = sum(len(s.split()) for s in sentences)
    print(f"{len(sentences)} sentences, {tokens} tokens -> {out_path}")


if __name__ == "__main__":
    main()
