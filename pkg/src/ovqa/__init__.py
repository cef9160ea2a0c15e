"""Desk-scale open-ended video question answering.

Multimodal sequence assembly with segment labels, a from-scratch
decoder-only transformer trained to generate free-form answers,
greedy/beam/nucleus decoding, BLEU/METEOR evaluation, and a
modality-ablation harness.
"""

__version__ = "0.1.0"
