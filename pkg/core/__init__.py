"""Kesin rasyonel cebir çekirdeği: polinomlar, reel kök izolasyonu, eliminasyon."""
