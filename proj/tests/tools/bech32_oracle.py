#!/usr/bin/env python3
# Copyright 2026 The chainlint Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reference BIP-173 Bech32 encoder/checker used to produce fixture data.

    bech32_oracle.py encode <hrp> <hex-payload>
    bech32_oracle.py check <string>...
"""

import sys

CHARSET = "qpzry9x8gf2tvdw0s3jn54khce6mua7l"
GEN = [0x3B6A57B2, 0x26508E6D, 0x1EA119FA, 0x3D4233DD, 0x2A1462B3]


def polymod(values):
    chk = 1
    for v in values:
        top = chk >> 25
        chk = (chk & 0x1FFFFFF) << 5 ^ v
        for i in range(5):
            chk ^= GEN[i] if ((top >> i) & 1) else 0
    return chk


def hrp_expand(hrp):
    return [ord(x) >> 5 for x in hrp] + [0] + [ord(x) & 31 for x in hrp]


def convertbits(data, frombits, tobits):
    acc, bits, ret = 0, 0, []
    maxv = (1 << tobits) - 1
    for value in data:
        acc = (acc << frombits) | value
        bits += frombits
        while bits >= tobits:
            bits -= tobits
            ret.append((acc >> bits) & maxv)
    if bits:
        ret.append((acc << (tobits - bits)) & maxv)
    return ret


def encode(hrp, payload):
    data = convertbits(payload, 8, 5)
    values = hrp_expand(hrp) + data
    mod = polymod(values + [0] * 6) ^ 1
    checksum = [(mod >> 5 * (5 - i)) & 31 for i in range(6)]
    return hrp + "1" + "".join(CHARSET[d] for d in data + checksum)


def check(s):
    if any(ord(c) < 33 or ord(c) > 126 for c in s):
        return False
    if s.lower() != s and s.upper() != s:
        return False
    s = s.lower()
    pos = s.rfind("1")
    if pos < 1 or pos + 7 > len(s) or len(s) > 90:
        return False
    if any(c not in CHARSET for c in s[pos + 1:]):
        return False
    data = [CHARSET.find(c) for c in s[pos + 1:]]
    return polymod(hrp_expand(s[:pos]) + data) == 1


def main(argv):
    if len(argv) == 4 and argv[1] == "encode":
        print(encode(argv[2], bytes.fromhex(argv[3])))
        return 0
    if len(argv) >= 3 and argv[1] == "check":
        for s in argv[2:]:
            print(("valid" if check(s) else "invalid") + "\t" + s)
        return 0
    print(__doc__, file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main(sys.argv))
