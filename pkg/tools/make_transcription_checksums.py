"""Freeze numeric checksums of the printed formulas.

Each key is a LaTeX snippet that must occur verbatim (up to whitespace) in the
source document.  Snippets are converted with an independent tokenizer, evaluated
by sympy at a few rational points, and written to tests/data/transcription.json.
Run from the repository root:  python3 tools/make_transcription_checksums.py
"""

import json
import re
import sys
from pathlib import Path

import sympy as sp

ROOT = Path(__file__).resolve().parents[1]
SAMPLES = ["3/7", "-5/11", "13/4"]
FAMILY = {"a": "2/7", "b": "3/11"}
DIGITS = 50

# id -> fields.  "repaired" holds a balanced version of a printed formula whose
# brackets do not match; the verbatim check still uses the printed text.
KEYS = {
    "II": {"theta": "(a,a,b,b)", "x": "s^2", "u": "s"},
    "III": {"theta": "(a,2a,a,1/3)", "x": r"\frac{s^3}{3 s-2}", "u": "s"},
    "IV": {"theta": "(b,b,b,1/2)", "x": r"-\frac{s^2(s^2-2 s)}{2 s-1}", "u": "s"},
    "I20": {"theta": r"\frac{(1,3,3,4)}{15}", "x": r"\frac{(2s-1)^2 (2s+9)^3}{2(20s^2+27)^2}",
            "u": r"\frac{(2s+9)(2s-1)(2s-3)}{2(20s^2+27)}"},
    "I21": {"theta": r"\frac{(0,0,1,2)}{5}", "x": r"\frac{(3s-1)^2 (s+3)^3}{8 s^3 (s+5)^2}",
            "u": r"\frac{(s+3)(3s-1)}{2 s(s+5)}"},
    "O08": {"theta": r"\frac{(0,0,1,5)}{12}", "x": r"\frac{(3s-8)^4}{s^4(s-3)^2}", "u": r"\frac{3s-8}{s(s-3)}"},
    "I23": {"theta": r"\frac{(1,5,7,7)}{30}", "x": r"-\frac{(2s-1)(5s-1)^2}{s^3(9s-2)(9s-5)^2}",
            "u": r"\frac{(5s-1)(2s-1)}{s^2(9s-5)}"},
    "I22": {"theta": r"\frac{(1,1,5,13)}{30}", "x": r"-\frac{(2s-1)(5s-1)^2}{s^3(9s-2)(9s-5)^2}",
            "u": r"-\frac{5s-1}{s(9s-5)}"},
    "K": {"theta": r"\frac{(1,1,2,1)}{7}", "x": r"\frac{2(s-3)^3(s^2-6s+16)^2}{s^3(s^2-7s+14)^2}",
          "u": r"\frac{(s^2-6s+16)(s-3)^2(s-4)}{s^2(s^2-7s+14)}"},
    "O09": {"theta": r"\frac{(1, 3, 3, 7)}{24}", "x": r"-\frac{4(4+4s+3s^2)^2}{s^3(s^2+2s+4)^2(s+4)}",
            "u": r"\frac{2(s+1)(4+4s+3s^2)}{s(s+4)(s^2+2s+4)}"},
    "I24": {"theta": r"\frac{(1,5,1,7)}{20}", "x": r"\frac{(s-3)^3(s+5)^5}{64s^3(s^2-6s+25)^2}",
            "u": r"\frac{(s+5)(s-3)(s^2-10s+5)}{8s(s^2-6s+25)}"},
    "I25": {"theta": r"\frac{(1,3,5,3)}{20}", "x": r"\frac{(s-3)^3(s+5)^5}{64s^3(s^2-6s+25)^2}",
            "u": r"\frac{(s-5)(s+5)^2(s-3)^2}{16s^2(s^2-6s+25)}"},
    "I32": {"theta": r"\frac{(0,0,0,1)}{5}", "x": r"\frac{(s-1)^5(3s+1)^3(s^2+4s-1)}{256s^5(5s^2-1)}",
            "u": r"-\frac{(3s+1)(s-1)^3}{16s^3}"},
    "I31": {"theta": r"\frac{(0,0,0,3)}{5}", "x": r"-\frac{(s^2+s-1)(2s+1)^3}{s^5(s^2-1-s)(s+2)^3}",
            "u": r"\frac{2s+1}{s(s+2)}"},
    "I29": {"theta": r"\frac{(3,7,7,7)}{30}", "x": r"\frac{(2s^2-s+2)^2(s+2)^5(3s-2)}{8s^5(5s^2+12)^2}",
            "u": r"\frac{(2s^2-s+2)(s+2)^2(s^2-s+2)}{2s^3(5s^2+12)}"},
    "I30": {"theta": r"\frac{(1,1,9,1)}{30}", "x": r"\frac{(2s^2-s+2)^2(s+2)^5(3s-2)}{8s^5(5s^2+12)^2}",
            "u": r"\frac{(2s^2-s+2)(s+2)^4}{4s^4(5s^2+12)}"},
    "I33": {"theta": r"\frac{(1,7,11,17)}{60}",
            "x": r"\frac{4(7s-10)(s^2+20)^2(s^2-5s+10)^3(s-5)}{27s^5(s^2-4s+20)^2(s-4)^3}",
            "u": r"\frac{2(7s-10)(s^2+20)(s^2-5s+10)}{3s^2(s^2-4s+20)(s-4)^2}"},
    "O07": {"theta": r"\frac{(1,1,5,5)}{24}", "x": r"\frac{(s+3)^3(3s+1)^3}{4s(9s^2+14s+9)^2}",
            "u": r"\frac{(s+3)(3s+1)^2}{2(9s^2+14s+9)}"},
    "T06": {"theta": r"\frac{(0,0,1,1)}{6}", "x": r"-\frac{(s-1)^3(s-3)^3}{s^3(s-2)^3}",
            "u": r"\frac{(s-3)(s-1)^2}{s(s-2)^2}"},
    "O10": {"theta": r"\frac{(0,0,1,1)}{4}", "x": r"-\frac{16(s-1)^3(s-3)^3}{s^3(s-2)^2(s-4)^3}",
            "u": r"\frac{4(s-1))(s-3)^2}{s^2(s-2)(s-4)}",
            "repaired": {"u": r"\frac{4(s-1)(s-3)^2}{s^2(s-2)(s-4)}"}},
    "O13": {"theta": r"\frac{(1,1,1,1)}{8}", "x": r"\frac{(s^2-1)^2(s^4+6s^2+1)^3}{32s^2(s^4+1)^3}",
            "u": r"\frac{(1+i)(s^2+(1-i)s+i)(s^2+2is+1)(s^2-1)(s^2-2is+1)^2}{8s(s^2-i)^2(s^2+i)(s^2+(1+i)s-i)}"},
    "I28": {"theta": r"\frac{(1,1,2,2)}{10}", "x": r"-\frac{(2s+3)^3(5s^2+4s+1)^2} {s^3(s^2+4s+5)^2(3s+2)^3}",
            "u": r"\frac{(2s+3)(s-1)(5s^2+4s+1)}{s (s^2+4s+5) (3s+2)^2(s+1)}"},
    "O11": {"theta": r"\frac{(0,0,1,1)}{6}", "x": r"\frac{(6s^2-8s+3)^2(2s-3)^4}{16s^4(2s^2-8s+9)^2(s-1)^4}",
            "u": r"\frac{(2s-3)(6s^2-8s+3)}{4s(2s^2-8s+9)(s-1)^3}"},
    "I27": {"theta": r"\frac{(1,2,2,2)}{15}", "t": r"\frac{s(2s+1)(5s+16)}{36}",
            "x": r"\frac{1}{2}-\frac{25s^4-40s^3-84s^2-136s-8}{72s(2s+1)^2} t",
            "u": r"\frac{1}{2}+\frac{5s^2+2s+2}{6s(2s+1)} t"},
    "I26": {"theta": r"\frac{(1,1,1,8)}{15}", "t": r"\frac{s(2s+1)(5s+16)}{36}",
            "x": r"\frac{1}{2}-\frac{25s^4-40s^3-84s^2-136s-8}{72s(2s+1)^2} t",
            "u": r"\frac{1}{2}-\frac{s-1}{s(2s+1)} t"},
    "I36": {"theta": r"\frac{(1,3,3,11)}{30}", "t": "3(5s-2)(16s^2-25s+10)",
            "x": r"\frac{1}{2}-\frac{160s^6+600s^5-2865s^4+4100s^3-2820s^2+960s-128}{6s^2(16s^2-25s+10)t}",
            "u": r"\frac{1}{2}-\frac{31s^2-46s+16}{2st}"},
    "I34": {"theta": r"\frac{(13,5,5,23)}{60}", "t": "s(32s^2-95s+80)",
            "x": r"\frac{1}{2}+\frac{2048s^6-15360s^5+48000s^4-77840s^3+65685s^2-20328s-4000}{54(32s^2-95s+80)t}",
            "u": r"\frac{1}{2}-\frac{64s^3-216s^2+249s-200}{6(8s-13)t}"},
    "I35": {"theta": r"\frac{(1,5,5,11)}{60}", "t": "s(32s^2-95s+80)",
            "x": r"\frac{1}{2}+\frac{2048s^6-15360s^5+48000s^4-77840s^3+65685s^2-20328s-4000}{54(32s^2-95s+80)t}",
            "u": r"\frac{1}{2}+\frac{64s^3-288s^2+447s-200}{18t}"},
    "I38": {"theta": r"\frac{(2,2,2,3)}{15}", "t": "3(5s-2)(4s^2-5s+10)",
            "x": r"\frac{1}{2}-\frac{50s^7-140s^6+438s^5-490s^4+655s^3+1290s^2-640s+1024}{486s^2(4s^2-5s+10)^2} t",
            "u": r"\frac{1}{2}-\frac{10s^4-22s^3+51s^2-22s+64}{54s(s+2)(4s^2-5s+10)}t"},
    "I37": {"theta": r"\frac{(1,1,1,6)}{15}", "t": "3(5s-2)(4s^2-5s+10)",
            "x": r"\frac{1}{2}-\frac{50s^7-140s^6+438s^5-490s^4+655s^3+1290s^2-640s+1024}{486s^2(4s^2-5s+10)^2} t",
            "u": r"\frac{1}{2}+\frac{10s^3-3s^2+30s-64}{6st}"},
    "I39": {"theta": r"\frac{(2,0,0,7)}{15}", "t": "3 (s+5)(4s^2+15s+15)",
            "x": r"\frac{1}{2}-\frac{2s^7+10s^6-90s^4-135s^3+297s^2+945s+675}{18(4s^2+15s+15)^2(s^2-5)}t",
            "u": r"\frac{1}{2}-\frac{(2s^2+3s-3)}{6(s+1)(4s^2+15s+15)}t"},
    "I40": {"theta": r"\frac{(1,0,0,4)}{15}", "t": "3 (s+5)(4s^2+15s+15)",
            "x": r"\frac{1}{2}-\frac{2s^7+10s^6-90s^4-135s^3+297s^2+945s+675}{18(4s^2+15s+15)^2(s^2-5)}t",
            "u": r"\frac{1}{2}-\frac{2s^3+4s^2-9s-15}{2t}"},
    "I41": {"theta": r"\frac{(0,0,0,1)}{3}", "t": "s(8s^2-11s+8)",
            "x": r"\frac{1}{2}+\frac{(s+1)(32s^8-320s^7+1112s^6-2420s^5+3167s^4-2420s^3+1112s^2-320s+32)}{54s^2(s-1)(8s^2-11s+8)t}",
            "u": r"\frac{1}{2}-\frac{8s^3-12s^2+3s-4}{6t}"},
    "237": {"theta": r"\frac{(1,5,5,5)}{42}", "t": "(2s-1)(4s^2-2s+7)",
            "x": r"\frac{1}{2}-\frac{16s^9-72s^8+144s^7-336s^6+252s^5-504s^4-294s^3+225s^2-288s+128}{54s^2(4s^2-2s+7)t}",
            "u": r"\frac{1}{2}+\frac{8s^5-4s^4+20s^3-8s^2-5s+16}{18st}"},
    "238": {"theta": r"\frac{(3,3,3,7)}{21}", "t": "(2s-1)(4s^2-2s+7)",
            "x": r"\frac{1}{2}-\frac{16s^9-72s^8+144s^7-336s^6+252s^5-504s^4-294s^3+225s^2-288s+128}{54s^2(4s^2-2s+7)t}",
            "u": r"\frac{1}{2}+\frac{4s^4-4s^3+12s^2-s+16}{6s(2s+1)(4s^2-2s+7)}t"},
    "239": {"theta": r"\frac{(1,1,1,17)}{42}", "t": "(2s-1)(4s^2-2s+7)",
            "x": r"\frac{1}{2}-\frac{16s^9-72s^8+144s^7-336s^6+252s^5-504s^4-294s^3+225s^2-288s+128}{54s^2(4s^2-2s+7)t}",
            "u": r"\frac{1}{2}-\frac{4s^3+3s-16}{6st}"},
    "I43": {"theta": r"\frac{(7,3,3,13)}{60}", "t": "3s(16s^2-61s+64)",
            "P": "512s^{10}-7680s^9+51840s^8-206560s^7+535380s^6-935448s^5 +1098280s^4-825660s^3+343875s^2-41120s-13824",
            "x": r"\frac{1}{2}+\frac{P(s)}{6(16s^2-61s+64)(2s^2-6s+5)^2t}",
            "u": r"\frac{1}{2}-\frac{32s^5-216s^4+590s^3 -846s^2 +689s-288}{2(4s-7)(2s^2-6s+5)t}"},
    "I42": {"theta": r"\frac{(1,9,9,19)}{60}", "t": "3s(16s^2-61s+64)",
            "P": "512s^{10}-7680s^9+51840s^8-206560s^7+535380s^6-935448s^5 +1098280s^4-825660s^3+343875s^2-41120s-13824",
            "x": r"\frac{1}{2}+\frac{P(s)}{6(16s^2-61s+64)(2s^2-6s+5)^2t}",
            "u": r"\frac{1}{2}+\frac{32s^5-256s^4+826s^3-1322s^2+1023s-288}{2(2s^2-6s+5)t}"},
    "I46": {"theta": r"\frac{(1,1,1,3)}{12}", "t": "(s+2)(8s^2-7s+2)",
            "P": "8s^{10}+16s^9+24s^8-84s^7+429s^6-312s^5+258s^4-288s^3+288s^2-128s+32",
            "x": r"\frac{1}{2}+\frac{(s^2+4s-2)P(s)}{2(s+2)^2(3s^2-2s+2)^2(8s^2-7s+2)t}",
            "u": r"\frac{1}{2}-\frac{4s^6+16s^5+9s^4-2s^3-34s^2+24s-8}{2(3s^2-2s+2)(s-2)t}"},
    "I44": {"theta": r"\frac{(0,3,3,0)}{10}", "t": "3(s-1)(5s^2+5s-1)",
            "P": "3125s^{10}-12500s^9+48000s^7-35400s^6-117936s^5 +191760s^4+27840s^3-58320s^2+10240s+2240",
            "x": r"\frac{1}{2}-i \frac{P(s)}{576(5s^2-10s-4)(5s^2+5s-1)(s-1)^2t}",
            "u": r"\frac{1}{2}+i \frac{(5s^2-22s+26)(5s^2+2s+2)^2(5s-2)(s+2)}{144(5s^2-10s-4)(5s^2+5s-1)(s-1)^2} +i \frac{(25s^3-30s^2-42s+20)^2+(54s)^2}{120(5s^2-10s-4)(s-1)t}"},
    "I45": {"theta": r"\frac{(0,1,1,0)}{10}", "t": "3(s-1)(5s^2+5s-1)",
            "P": "3125s^{10}-12500s^9+48000s^7-35400s^6-117936s^5 +191760s^4+27840s^3-58320s^2+10240s+2240",
            "x": r"\frac{1}{2}-i \frac{P(s)}{576(5s^2-10s-4)(5s^2+5s-1)(s-1)^2t}",
            "u": r"\frac{1}{2}+i \frac{(5s^2-22s+26)(5s^2+2s+2)(5s-2)(s+2)}{24(s-1)(5s^2-10s-4)(5s^2+5s-1)} +i \frac{5s^2-4s+8} {2(5s^2-10s-4)(5s^2+5s-1)}t"},
    "O12": {"theta": r"\frac{(1,1,1,1)}{12}", "t": "(2s+1)(9s^2+2s+1)",
            "x": r"\frac{1}{2}+\frac{27s^4+28s^3+26s^2+12s+3)s}{(s+1)^3(9s^2+2s+1)^2}t",
            "u": r"\frac{1}{2}+\frac{11s^3+5s+1+7s^2}{2(s+1)^2t}",
            "repaired": {"x": r"\frac{1}{2}+\frac{(27s^4+28s^3+26s^2+12s+3)s}{(s+1)^3(9s^2+2s+1)^2}t"}},
    "I47": {"theta": r"\frac{(2,7,7,2)}{30}", "t": "(3s+1)(s+3)(s^2+1)(3s^2+4s+3)",
            "P": "81s^{14}+270s^{13}+567s^{12}+540s^{11}+621s^{10}+1314s^9+2955s^8 +3688s^7+2955s^6+1314s^5+621s^4+540s^3+567s^2+270s+81",
            "x": r"\frac{1}{2}+\frac{P(s)}{54}t",
            "u": r"\frac{1}{2}-\frac{4s^2(3s^2+3s+2)(2s^2+3s+3)(9s^4-2s^2+9)}{9(s-1)(3s^2+4s+3)(s^2+1)^2(s+1)^3(3s^2+2s+3)} +\frac{(3s^3+3s^2+s-3)(3s^3-s^2-3s-3)}{6(s+1)(3s^2+4s+3)(s^2+1)^2(3s^2+2s+3)}t"},
    "I48": {"theta": r"\frac{(1,4,4,1)}{30}", "t": "(3s+1)(s+3)(s^2+1)(3s^2+4s+3)",
            "P": "81s^{14}+270s^{13}+567s^{12}+540s^{11}+621s^{10}+1314s^9+2955s^8 +3688s^7+2955s^6+1314s^5+621s^4+540s^3+567s^2+270s+81",
            "x": r"\frac{1}{2}+\frac{P(s)}{54}t",
            "u": r"\frac{1}{2}+\frac{27s^9+63s^8+108s^7+36s^6+42s^5+130s^4+300s^3+228s^2+99s-9}{18(s-1)(s+1)^4(s^2+1)^2(3s+1)(3s^2+4s+3)}t"},
    "I49": {"theta": r"\frac{(0,1,1,0)}{6}",
            "t": r"\frac{1}{75}(s^2+2s+5)(s^2+4s+5)(3s^4+30s^3+110s^2+150s+75)",
            "P": "27 s^{16}+648 s^{15}+7452 s^{14}+53568 s^{13}+266292 s^{12}+968400 s^{11}+2714980 s^{10}+6371400 s^9 "
                 "+14138050 s^8+31857000 s^7+67874500 s^6+121050000 s^5 +166432500 s^4+167400000 s^3 "
                 "+116437500 s^2+50625000 s+10546875",
            "x": r"\frac{1}{2}-\frac{5 (s+1) (5+s) P(s)}{6(s^2-5) (3 s^4+30 s^3+110 s^2+150 s+75)^2 (s^2+2 s+5)^3 (s^2+4 s+5)^3}t",
            "u": r"\frac{1}{2}-\frac{2s(s^2+5s+10)(3s^2+10s+15)(2s^2+5s+5)(3s+5)^2(3+s)^2} {3(s^2-5)(3s^4+30s^3+110s^2+150s+75)(s^2+2s+5)^2(s^2+4s+5)} "
                 r"-\frac{5(s^3+25s^2++75s+75)(3s^3+15s^2+25s+5)} {2(s^2-5)(3s^4+30s^3+110s^2+150s+75)(s^2+2s+5)^2}t"},
    "I50": {"theta": r"\frac{(3,3,3,3)}{20}", "t1": "-s(2s-1)(s+2)", "t2": "(2s-1)(s^2+2s+5)",
            "x": r"\frac{1}{2}-\frac{s^{10}+10s^9+45s^8+120s^7+190s^6-4s^5-410s^4-680s^3+25s^2+90s-27}{16s^2(s^2+2s+5)(s+2)^3(2s-1)^2}t_1",
            "u": r"\frac{1}{2}-\frac{(s^2+4s-1)(s^2+4s+9)(s^2+1)^2}{4s(s^3+3s^2+15s+1)(s+2)t_2}-\frac{s^3+3s^2+3s-3}{2(s^3+3s^2+15s+1)s}t_1"},
    "I51": {"theta": r"\frac{(1,1,1,1)}{20}", "t1": "-s(2s-1)(s+2)", "t2": "(2s-1)(s^2+2s+5)",
            "x": r"\frac{1}{2}-\frac{s^{10}+10s^9+45s^8+120s^7+190s^6-4s^5-410s^4-680s^3+25s^2+90s-27}{16s^2(s^2+2s+5)(s+2)^3(2s-1)^2}t_1",
            "u": r"\frac{1}{2}-\frac{(s^2+4s-1)(s^2+4s+9)(s^2+1)}{4s(s+1)(s+2)^2t_2}-\frac{s-3}{2s(s+1)(s+2)^2}t_1"},
    "I52": {"theta": r"\frac{(1,1,1,1)}{12}", "t1": "s(3s-2)(2s-3)(2s^2-s+2)(4s^2-7s+4)",
            "t2": "-s^3(3s^2-4s+3) (4s^2-7s+4)",
            "P": "864(s^{16}+1)-10368(s^{15}+s) +59616(s^{14}+s^2)-221184(s^{13}+s^3)+599976(s^{12}+s^4) -1263960(s^{11}+s^5)+2127908(s^{10}+s^6)-2899008(s^9+s^7)+3212357s^8",
            "x": r"\frac{1}{2}-\frac{(s^2-1)P(s)}{s(3s-2)(2s-3)(3s^2-4s+3)t_1^3}",
            "u": r"\frac{1}{2}+\frac{3(2s^2-2s+1)^2(s^2-3s+1)(s^2-2s+2)(6s^4-6s^3+s^2-6s+6)s}{(3s-2)^2(2s-3)(2s^2-s+2)(2s^3-4s^2+6s-3)t_2} -\frac{s(6s^3-12s^2+8s+1)}{2(3s-2)^2 (2s^2-s+2)(2s^3-4s^2+6s-3)}t_1"},
}


def normalize(text):
    text = re.sub(r"\\nonumber\\\\\s*&\s*&", " ", text)
    text = re.sub(r"\\phantom\{[^}]*\}", " ", text)
    text = re.sub(r"\\(left|right)\b", "", text)
    return re.sub(r"\s+", " ", text)


def squash(text):
    return re.sub(r"\s+", "", normalize(text))


_TOK = re.compile(r"t_\{?(\d)\}?|\\frac|[A-Za-z]|\d+|[-+*/^(){}]|\s+")


def to_sympy(latex, sub_p=None):
    """LaTeX fragment -> sympy expression in s, t, t1, t2, a, b."""
    s = squash(latex)
    s = s.replace("P(s)", "(" + to_str(sub_p) + ")") if sub_p else s
    return sp.sympify(to_str_raw(s), locals=_LOCALS)


def to_str(latex):
    return to_str_raw(squash(latex))


def to_str_raw(s):
    out = []
    pos = 0
    while pos < len(s):
        m = _TOK.match(s, pos)
        if not m:
            raise ValueError(f"cannot tokenize at {s[pos:pos + 20]!r}")
        tok = m.group(0)
        pos = m.end()
        if tok.isspace():
            continue
        if m.group(1):
            tok = "t" + m.group(1)
        elif tok == "\\frac":
            # \frac{A}{B} -> ((A)/(B)); braces handled by the caller below
            num, pos = _group(s, pos)
            den, pos = _group(s, pos)
            tok = f"(({to_str_raw(num)})/({to_str_raw(den)}))"
        elif tok == "^":
            if s[pos] == "{":
                grp, pos = _group(s, pos)
                tok = f"**({grp})"
            else:
                tok = "**" + s[pos]
                pos += 1
        elif tok == "i":
            tok = "I"
        out.append(tok)
    # implicit multiplication between adjacent operands
    res = []
    for tok in out:
        if res and _ends_operand(res[-1]) and _starts_operand(tok):
            res.append("*")
        res.append(tok)
    return "".join(res)


def _ends_operand(tok):
    return tok[-1].isalnum() or tok[-1] == ")"


def _starts_operand(tok):
    return tok[0].isalnum() or tok[0] == "("


def _group(s, pos):
    if s[pos] != "{":
        raise ValueError(f"expected '{{' at {s[pos:pos + 20]!r}")
    depth = 0
    for k in range(pos, len(s)):
        if s[k] == "{":
            depth += 1
        elif s[k] == "}":
            depth -= 1
            if depth == 0:
                return s[pos + 1:k], k + 1
    raise ValueError("unbalanced braces")


_S, _T, _T1, _T2, _A, _B = sp.symbols("s t t1 t2 a b")
_LOCALS = {"s": _S, "t": _T, "t1": _T1, "t2": _T2, "a": _A, "b": _B, "I": sp.I}


def theta_values(latex):
    m = re.fullmatch(r"\\frac\{\((.*)\)\}\{(\d+)\}", squash(latex))
    if m:
        parts, den = m.group(1).split(","), int(m.group(2))
    else:
        parts, den = squash(latex).strip("()").split(","), 1
    fam = {_A: sp.Rational(FAMILY["a"]), _B: sp.Rational(FAMILY["b"])}
    vals = [sp.sympify(to_str_raw(p), locals=_LOCALS).subs(fam) / den for p in parts]
    return [str(sp.Rational(v)) for v in vals]


def evaluate(expr, key, s0):
    s0 = sp.Rational(s0)
    env = {_S: s0}
    for name, sym in (("t", _T), ("t1", _T1), ("t2", _T2)):
        if name in key:
            rad = to_sympy(key[name]).subs(_S, s0)
            env[sym] = sp.sqrt(rad)
    val = sp.N(expr.subs(env), DIGITS + 10)
    re_, im_ = val.as_real_imag()
    return [sp.Float(re_, DIGITS).__format__(f".{DIGITS}e"), sp.Float(im_, DIGITS).__format__(f".{DIGITS}e")]


def degree_pair(expr):
    num, den = sp.fraction(sp.cancel(sp.together(expr), extension=sp.I) if expr.has(sp.I) else sp.cancel(expr))
    return [sp.Poly(num, _S, extension=True).degree(), sp.Poly(den, _S, extension=True).degree()]


def main():
    paper = squash((ROOT / "paper.md").read_text())
    missing = []
    out = {"samples": SAMPLES, "family": FAMILY, "digits": DIGITS, "entries": {}}
    for ident, key in KEYS.items():
        for field, snippet in key.items():
            if field == "repaired":
                continue
            if squash(snippet) not in paper:
                missing.append((ident, field, snippet))
        rec = {"theta": theta_values(key["theta"]), "values": {}, "repaired": sorted(key.get("repaired", {}))}
        for field in ("x", "u"):
            latex = key.get("repaired", {}).get(field, key[field])
            expr = to_sympy(latex, key.get("P"))
            rec["values"][field] = [evaluate(expr, key, s0) for s0 in SAMPLES]
            if not any(n in key for n in ("t", "t1", "t2")):
                rec.setdefault("degrees", {})[field] = degree_pair(expr)
        for name in ("t", "t1", "t2"):
            if name in key:
                rad = to_sympy(key[name])
                rec.setdefault("radicands", []).append(
                    [str(sp.Rational(rad.subs(_S, sp.Rational(s0)))) for s0 in SAMPLES])
        out["entries"][ident] = rec
    if missing:
        for m in missing:
            print("not found verbatim:", *m, file=sys.stderr)
        return 1
    dest = ROOT / "tests" / "data" / "transcription.json"
    dest.write_text(json.dumps(out, indent=1) + "\n")
    print(f"wrote {dest} ({len(out['entries'])} entries)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
