#!/usr/bin/env python3
"""
Example usage of the Allee classifier at the n = 4 reference point
"""

from config import constants
from allee.counting import count_all
from allee.monotonicity import no_border_beyond, remark_roots
from allee.systems import partitions


def main():
    """Main function to demonstrate counting at one parameter point"""

    a, b = constants.REFERENCE_SAMPLE_A, constants.REFERENCE_SAMPLE_B
    n = 4

    print("🚀 Allee RRC örnek çalışma")
    print(f"📍 Nokta: a = {a}, b = {b} (≈ {float(a):.6f}, {float(b):.6f})")

    parts = partitions(n)
    print(f"\n🧩 n = {n} bölüntüleri: ikililer {parts.pairs}, üçlüler {parts.triples}")

    try:
        print("\n🔢 Bölüntü sayımları hesaplanıyor...")
        total = count_all(n, a, b, constants.FORMULA_MODE_DEDUP)
        for c in total.counts:
            print(f"   {c.label:12} toplam pozitif={c.total_positive:3d}  köşegen dışı={c.off_diagonal:3d}  c={c.paper_c}")

        print("\n📐 Toplam denge noktası sayısı:")
        for mode, value in sorted(total.alternatives.items()):
            print(f"   {mode:8} {value}")
        if total.note:
            print(f"⚠️ {total.note}")

        print("\n📏 a ≥ 7/100 bölgesinde g1, g2 sıfırı yok mu?", "✅" if no_border_beyond() else "❌")
        g1_root, g2_root = remark_roots()
        print(f"   b = 1/2: g1 kökü ≈ {g1_root.approx():.6f}, g2 kökü ≈ {g2_root.approx():.6f}")

    except ValueError as e:
        print(f"❌ Error: {e}")


if __name__ == "__main__":
    main()
