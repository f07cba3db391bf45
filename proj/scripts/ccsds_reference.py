#!/usr/bin/env python3
"""Independent CCSDS space-packet reference encoder.

Generates the golden vector files under data/golden/ and re-verifies them.
This implementation is deliberately kept separate from the C++ codec so the
golden files are produced by a second, independent path.

Usage:
  ccsds_reference.py emit   <hex-file> <fields-file>
  ccsds_reference.py verify <hex-file> <fields-file>
"""

import sys


def encode(apid, ptype, sec, seq, payload):
    if len(payload) < 1 or len(payload) > 65536:
        raise ValueError("payload size out of range")
    b0 = ((0 & 0x7) << 5) | ((ptype & 0x1) << 4) | ((sec & 0x1) << 3) | ((apid >> 8) & 0x7)
    b1 = apid & 0xFF
    b2 = (0b11 << 6) | ((seq >> 8) & 0x3F)
    b3 = seq & 0xFF
    dl = len(payload) - 1
    hdr = bytes([b0, b1, b2, b3, (dl >> 8) & 0xFF, dl & 0xFF])
    return hdr + payload


def pattern_payload(kind, n):
    if kind == "inc":
        return bytes(i & 0xFF for i in range(n))
    if kind == "zeros":
        return bytes(n)
    if kind == "ones":
        return bytes([0xFF]) * n
    if kind == "lcg":
        out = bytearray()
        x = 0x12345678
        for _ in range(n):
            x = (1103515245 * x + 12345) & 0x7FFFFFFF
            out.append((x >> 16) & 0xFF)
        return bytes(out)
    raise ValueError(kind)


# apid, type(0=tlm,1=cmd), sec_hdr, seq, payload pattern, payload len
VECTORS = [
    (0x1A0, 0, 0, 0, "inc", 8),        # spec worked example: 01 A0 C0 00 00 07
    (0x1A0, 0, 0, 1, "inc", 8),
    (0x1A1, 0, 0, 40, "lcg", 1766),    # IMU batch sized payload
    (0x1A2, 0, 0, 12345, "lcg", 4096),
    (0x1A2, 1, 0, 7, "lcg", 64),       # sync ack direction
    (0x1B0, 1, 0, 2, "inc", 9),        # phase flag command
    (0x1B0, 0, 0, 2, "inc", 1),        # flag ack echo, minimum payload
    (0x1B1, 0, 0, 999, "lcg", 18),     # deployer H&S payload size
    (0x000, 0, 0, 0, "zeros", 1),      # all-zero extreme
    (0x7FF, 1, 1, 16383, "ones", 256), # all-max fields, seq at wrap point
    (0x0AB, 0, 1, 8191, "lcg", 333),
    (0x1A0, 1, 0, 16000, "inc", 500),
]


def emit(hex_path, fields_path):
    hex_lines = []
    field_lines = []
    for apid, ptype, sec, seq, pat, n in VECTORS:
        payload = pattern_payload(pat, n)
        enc = encode(apid, ptype, sec, seq, payload)
        hex_lines.append(enc.hex())
        field_lines.append(
            f"apid=0x{apid:03X} type={ptype} sec={sec} seq={seq} len={n}"
        )
    with open(hex_path, "w") as f:
        f.write("\n".join(hex_lines) + "\n")
    with open(fields_path, "w") as f:
        f.write("\n".join(field_lines) + "\n")
    print(f"wrote {len(VECTORS)} vectors")


def verify(hex_path, fields_path):
    with open(hex_path) as f:
        hex_lines = [ln.strip() for ln in f if ln.strip()]
    with open(fields_path) as f:
        field_lines = [ln.strip() for ln in f if ln.strip()]
    if len(hex_lines) != len(field_lines):
        print("FAIL: line count mismatch")
        return 1
    if len(hex_lines) != len(VECTORS):
        print("FAIL: vector count drifted from reference table")
        return 1
    for i, ((apid, ptype, sec, seq, pat, n), hx, fl) in enumerate(
        zip(VECTORS, hex_lines, field_lines)
    ):
        payload = pattern_payload(pat, n)
        enc = encode(apid, ptype, sec, seq, payload)
        if enc.hex() != hx:
            print(f"FAIL: vector {i} hex mismatch")
            return 1
        expect = f"apid=0x{apid:03X} type={ptype} sec={sec} seq={seq} len={n}"
        if fl != expect:
            print(f"FAIL: vector {i} fields mismatch: {fl!r} != {expect!r}")
            return 1
    print(f"OK: {len(VECTORS)} golden vectors verified")
    return 0


def main():
    if len(sys.argv) != 4 or sys.argv[1] not in ("emit", "verify"):
        print(__doc__)
        return 2
    if sys.argv[1] == "emit":
        emit(sys.argv[2], sys.argv[3])
        return 0
    return verify(sys.argv[2], sys.argv[3])


if __name__ == "__main__":
    sys.exit(main())
