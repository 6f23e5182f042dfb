from pathlib import Path
from typing import Iterable

DATA = Path(__file__).parent / 'data'

# all perfect powers of A352991 in (1, 10**16], ascending
# fmt: off
SQUARES_UP_TO_M10 = [
    # block 8
    13527684, 34857216, 65318724, 73256481, 81432576,
    # block 9
    139854276, 152843769, 157326849, 215384976, 245893761,
    254817369, 326597184, 361874529, 375468129, 382945761,
    385297641, 412739856, 523814769, 529874361, 537219684,
    549386721, 587432169, 589324176, 597362481, 615387249,
    627953481, 653927184, 672935481, 697435281, 714653289,
    735982641, 743816529, 842973156, 847159236, 923187456,
    # block 10
    14102987536, 24891057361, 27911048356, 28710591364,
    57926381041, 59710832164, 75910168324,
]
# fmt: on

NEXT_SQUARE = 10135681742311129


def write_lines(path: Path, lines: Iterable[str]) -> Path:
    path.write_text(''.join(f'{line}\n' for line in lines))
    return path
