#pragma once

// Embedded reference catalog: one record per line, key=value fields.
// kind=new entries are the verified codes of lengths 56..92; kind=parent
// entries are the intermediate self-dual codes their building-up
// extensions start from. family/alpha/beta are the reported
// weight-enumerator parameters, d the reported minimum distance and aut
// the reported automorphism group order (stored but never checked).

#include <string_view>

namespace sdcirc {

inline constexpr std::string_view catalog_text = R"CATALOG(
id=C_56,1 kind=new cons=fourcirc ring=F4 n=7 lambda=1 mu=1 a=1110320 b=3002312 c=3231112 family=W_56,2 alpha=-49 d=10 aut=2*7
id=Cp_12,1 kind=parent cons=fourcirc ring=F2uv n=3 lambda=F mu=9 a=957 b=D85 c=EFE
id=Cp_12,2 kind=parent cons=fourcirc ring=F2uv n=3 lambda=3 mu=D a=831 b=71B c=E1E
id=Cp_12,3 kind=parent cons=fourcirc ring=F2uv n=3 lambda=1 mu=7 a=07F b=371 c=66D
id=Cp_12,4 kind=parent cons=fourcirc ring=F2uv n=3 lambda=B mu=B a=6B1 b=5DF c=454
id=Cp_12,5 kind=parent cons=fourcirc ring=F2uv n=3 lambda=D mu=B a=AF3 b=D3B c=C43
id=Cp_12,6 kind=parent cons=fourcirc ring=F2uv n=3 lambda=3 mu=F a=33D b=DF0 c=A2B
id=Cp_12,7 kind=parent cons=fourcirc ring=F2uv n=3 lambda=1 mu=3 a=07F b=F5B c=C7C
id=Cp_12,8 kind=parent cons=fourcirc ring=F2uv n=3 lambda=B mu=3 a=FD5 b=075 c=E7E
id=Cp_12,9 kind=parent cons=fourcirc ring=F2uv n=3 lambda=F mu=9 a=99B b=71C c=C3C
id=Cp_12,10 kind=parent cons=fourcirc ring=F2uv n=3 lambda=B mu=9 a=359 b=25F c=E3E
id=Cp_12,11 kind=parent cons=fourcirc ring=F2uv n=3 lambda=1 mu=B a=B71 b=F78 c=E6B
id=Cp_12,12 kind=parent cons=fourcirc ring=F2uv n=3 lambda=5 mu=1 a=BBB b=9A9 c=2D2
id=Cp_12,13 kind=parent cons=fourcirc ring=F4u n=3 lambda=9 mu=D a=2A9 b=4AE c=544
id=Cp_12,14 kind=parent cons=fourcirc ring=F4u n=3 lambda=D mu=D a=526 b=282 c=100
id=Cp_12,15 kind=parent cons=fourcirc ring=F4u n=3 lambda=9 mu=5 a=1A0 b=F2B c=100
id=Cp_12,16 kind=parent cons=fourcirc ring=F4u n=3 lambda=9 mu=5 a=977 b=34F c=100
id=Cp_12,17 kind=parent cons=fourcirc ring=F4u n=3 lambda=1 mu=9 a=736 b=CE1 c=858
id=Cp_12,18 kind=parent cons=fourcirc ring=F4u n=3 lambda=9 mu=D a=1B5 b=529 c=001
id=C_56,2 kind=new cons=buildup parent=Cp_12,1 epsilon=D delta=EBEB4DA6D9A6 family=W_56,1 alpha=-52 d=10 aut=2^2
id=C_56,3 kind=new cons=buildup parent=Cp_12,1 epsilon=D delta=5D1373E2FDE5 family=W_56,1 alpha=-48 d=10 aut=2^2
id=C_56,4 kind=new cons=buildup parent=Cp_12,2 epsilon=7 delta=C8A98C86755D family=W_56,1 alpha=-46 d=10 aut=2^2
id=C_56,5 kind=new cons=buildup parent=Cp_12,3 epsilon=D delta=53DFED023D37 family=W_56,1 alpha=-44 d=10 aut=2^2
id=C_56,6 kind=new cons=buildup parent=Cp_12,13 epsilon=D delta=6847C689DE95 family=W_56,1 alpha=-43 d=10 aut=2
id=C_56,7 kind=new cons=buildup parent=Cp_12,1 epsilon=7 delta=77EF377F3D46 family=W_56,1 alpha=-42 d=10 aut=2^2
id=C_56,8 kind=new cons=buildup parent=Cp_12,13 epsilon=9 delta=A6A8CB9C1499 family=W_56,1 alpha=-41 d=10 aut=2
id=C_56,9 kind=new cons=buildup parent=Cp_12,14 epsilon=9 delta=1155EF4F171C family=W_56,1 alpha=-39 d=10 aut=2
id=C_56,10 kind=new cons=buildup parent=Cp_12,15 epsilon=9 delta=071C9E507475 family=W_56,1 alpha=-37 d=10 aut=2
id=C_56,11 kind=new cons=buildup parent=Cp_12,4 epsilon=B delta=222332B06AF3 family=W_56,1 alpha=-36 d=10 aut=2^2
id=C_56,12 kind=new cons=buildup parent=Cp_12,16 epsilon=D delta=40DD2E682BA8 family=W_56,1 alpha=-35 d=10 aut=2
id=C_56,13 kind=new cons=buildup parent=Cp_12,5 epsilon=1 delta=8EFCE02FED71 family=W_56,1 alpha=-20 d=10 aut=2^2
id=C_56,14 kind=new cons=buildup parent=Cp_12,17 epsilon=9 delta=2396462B0954 family=W_56,1 alpha=-17 d=10 aut=2
id=C_56,15 kind=new cons=buildup parent=Cp_12,16 epsilon=D delta=200E34345CD9 family=W_56,1 alpha=-15 d=10 aut=2
id=C_56,16 kind=new cons=buildup parent=Cp_12,18 epsilon=D delta=0625805ED91E family=W_56,1 alpha=-13 d=10 aut=2
id=C_56,17 kind=new cons=buildup parent=Cp_12,6 epsilon=9 delta=B7B77FF08521 family=W_56,2 alpha=-48 d=10 aut=2^2
id=C_56,18 kind=new cons=buildup parent=Cp_12,7 epsilon=5 delta=EEC4CDD6BDE3 family=W_56,2 alpha=-47 d=10 aut=2^2
id=C_56,19 kind=new cons=buildup parent=Cp_12,8 epsilon=D delta=C204459424ED family=W_56,2 alpha=-46 d=10 aut=2^2
id=C_56,20 kind=new cons=buildup parent=Cp_12,9 epsilon=1 delta=7141B8B30F5F family=W_56,2 alpha=-45 d=10 aut=2^2
id=C_56,21 kind=new cons=buildup parent=Cp_12,10 epsilon=D delta=11AFA2912E93 family=W_56,2 alpha=-44 d=10 aut=2^2
id=C_56,22 kind=new cons=buildup parent=Cp_12,6 epsilon=1 delta=6538469B9516 family=W_56,2 alpha=-43 d=10 aut=2^2
id=C_56,23 kind=new cons=buildup parent=Cp_12,1 epsilon=F delta=E10A9596C3BF family=W_56,2 alpha=-41 d=10 aut=2^2
id=C_56,24 kind=new cons=buildup parent=Cp_12,7 epsilon=F delta=63A97D46ACCB family=W_56,2 alpha=-39 d=10 aut=2^2
id=C_56,25 kind=new cons=buildup parent=Cp_12,10 epsilon=1 delta=0137F87FD723 family=W_56,2 alpha=-37 d=10 aut=2^2
id=C_56,26 kind=new cons=buildup parent=Cp_12,8 epsilon=B delta=CDA9F7DEB302 family=W_56,2 alpha=-36 d=10 aut=2^2
id=C_56,27 kind=new cons=buildup parent=Cp_12,11 epsilon=3 delta=43D72C348FC4 family=W_56,2 alpha=-33 d=10 aut=2^2
id=C_56,28 kind=new cons=buildup parent=Cp_12,3 epsilon=1 delta=01A517F0F84B family=W_56,2 alpha=-3 d=10 aut=2^2
id=C_56,29 kind=new cons=buildup parent=Cp_12,12 epsilon=1 delta=A169C21CFB80 family=W_56,2 alpha=-1 d=10 aut=2^2
id=Cp_28,1 kind=parent cons=fourcirc ring=F4 n=7 lambda=1 mu=1 a=2331311 b=2221222 c=0000001
id=C_58,1 kind=new cons=buildup parent=Cp_28,1 premap=psi_f4 epsilon=1 delta=00100011110001010001100101111101001001111010110001010100 family=W_58,2 alpha=118 beta=1 d=10 aut=2
id=C_64,1 kind=new cons=fourcirc ring=F4 n=8 lambda=1 mu=1 a=23113202 b=10112022 c=33100231 family=W_64,2 alpha=53 d=12 aut=2^3
id=C_80,1 kind=new cons=fourcirc ring=F2 n=20 lambda=1 mu=1 a=00110110101100111001 b=01111111101101111110 c=01111111000111111101 family=W_80 alpha=-440 beta=0 d=14 aut=2^3*5
id=C_80,2 kind=new cons=fourcirc ring=F2 n=20 lambda=1 mu=1 a=01010110110001001110 b=00101000110101010011 c=00111000100010100010 family=W_80 alpha=-400 beta=0 d=14 aut=2^3*5
id=C_80,3 kind=new cons=fourcirc ring=F2 n=20 lambda=1 mu=1 a=01100011100111001011 b=11100111100000100110 c=10100000001010001000 family=W_80 alpha=-520 beta=10 d=14 aut=2^4*3*5
id=C_80,4 kind=new cons=fourcirc ring=F2 n=20 lambda=1 mu=1 a=11011010010111001011 b=11110111101100100110 c=01011111001010000001 family=W_80 alpha=-380 beta=10 d=14 aut=2^2*5
id=C_80,5 kind=new cons=fourcirc ring=F2u n=10 lambda=1 mu=1 a=1012003233 b=1313102320 c=1212130203 family=W_80 alpha=-420 beta=0 d=14 aut=2^2*5
id=C_80,6 kind=new cons=fourcirc ring=F2u n=10 lambda=1 mu=1 a=2232033031 b=3023203111 c=0303023332 family=W_80 alpha=-480 beta=10 d=14 aut=2^4*5
id=C_80,7 kind=new cons=fourcirc ring=F2u n=10 lambda=1 mu=1 a=0130132012 b=0321112301 c=2020202320 family=W_80 alpha=-460 beta=10 d=14 aut=2^2*5
id=C_80,8 kind=new cons=fourcirc ring=F2uv n=5 lambda=B mu=3 a=92EB2 b=00337 c=00030 family=W_80 alpha=-156 beta=1 d=14 aut=2^3*3
id=C_80,9 kind=new cons=fourcirc ring=F2uv n=5 lambda=5 mu=D a=51F8F b=F5BF9 c=E9ECC family=W_80 alpha=-296 beta=2 d=14 aut=2^2
id=C_80,10 kind=new cons=fourcirc ring=F2uv n=5 lambda=B mu=B a=51B78 b=D7191 c=EC461 family=W_80 alpha=-292 beta=2 d=14 aut=2^2
id=C_80,11 kind=new cons=fourcirc ring=F2uv n=5 lambda=9 mu=1 a=3FFFF b=1813B c=0440F family=W_80 alpha=-288 beta=2 d=14 aut=2^2
id=C_80,12 kind=new cons=fourcirc ring=F2uv n=5 lambda=7 mu=7 a=5793F b=585D3 c=34A2C family=W_80 alpha=-268 beta=2 d=14 aut=2^2
id=C_80,13 kind=new cons=fourcirc ring=F2uv n=5 lambda=B mu=9 a=11B93 b=D1BF8 c=3A00A family=W_80 alpha=-264 beta=2 d=14 aut=2^2
id=C_80,14 kind=new cons=fourcirc ring=F2uv n=5 lambda=F mu=7 a=FDB18 b=991BD c=64B46 family=W_80 alpha=-256 beta=2 d=14 aut=2^2
id=C_80,15 kind=new cons=fourcirc ring=F2uv n=5 lambda=1 mu=9 a=B3D1D b=3D8D3 c=EA9AE family=W_80 alpha=-240 beta=2 d=14 aut=2^2
id=C_80,16 kind=new cons=fourcirc ring=F2uv n=5 lambda=F mu=7 a=55B39 b=35D8D c=E2D2E family=W_80 alpha=-236 beta=2 d=14 aut=2^2
id=C_80,17 kind=new cons=fourcirc ring=F2uv n=5 lambda=D mu=D a=8B95F b=5FDD9 c=2D244 family=W_80 alpha=-220 beta=2 d=14 aut=2^2
id=C_80,18 kind=new cons=fourcirc ring=F2uv n=5 lambda=7 mu=F a=F95FF b=5F93C c=14C4C family=W_80 alpha=-216 beta=2 d=14 aut=2^3
id=C_80,19 kind=new cons=fourcirc ring=F2uv n=5 lambda=7 mu=3 a=B8B3D b=FDB9B c=C3C4C family=W_80 alpha=-212 beta=2 d=14 aut=2^2
id=C_80,20 kind=new cons=fourcirc ring=F2uv n=5 lambda=5 mu=7 a=53710 b=93999 c=2A292 family=W_80 alpha=-352 beta=4 d=14 aut=2^2
id=C_80,21 kind=new cons=fourcirc ring=F2uv n=5 lambda=D mu=D a=D8D1D b=1BB77 c=3C6EC family=W_80 alpha=-272 beta=4 d=14 aut=2^2
id=C_80,22 kind=new cons=fourcirc ring=F2uv n=5 lambda=D mu=5 a=5757D b=97358 c=E070E family=W_80 alpha=-260 beta=4 d=14 aut=2^2
id=C_80,23 kind=new cons=fourcirc ring=F2uv n=5 lambda=1 mu=F a=28FDB b=E0FE5 c=2AA9A family=W_80 alpha=-216 beta=4 d=14 aut=2^2
id=C_80,24 kind=new cons=fourcirc ring=F2uv n=5 lambda=F mu=B a=5A4B6 b=8D538 c=B66EE family=W_80 alpha=-164 beta=4 d=14 aut=2^2
id=C_80,25 kind=new cons=fourcirc ring=F2uv n=5 lambda=3 mu=B a=35853 b=7BFD9 c=0E603 family=W_80 alpha=-364 beta=6 d=14 aut=2^2
id=C_80,26 kind=new cons=fourcirc ring=F2uv n=5 lambda=3 mu=7 a=975B5 b=8D137 c=0C405 family=W_80 alpha=-356 beta=6 d=14 aut=2^2
id=C_80,27 kind=new cons=fourcirc ring=F2uv n=5 lambda=F mu=7 a=73D97 b=38397 c=0A205 family=W_80 alpha=-328 beta=6 d=14 aut=2^2
id=C_80,28 kind=new cons=fourcirc ring=F2uv n=5 lambda=5 mu=D a=1DF31 b=9D565 c=600E5 family=W_80 alpha=-324 beta=6 d=14 aut=2^2
id=C_80,29 kind=new cons=fourcirc ring=F2uv n=5 lambda=F mu=7 a=9F131 b=5851F c=44CC5 family=W_80 alpha=-316 beta=6 d=14 aut=2^2
id=C_80,30 kind=new cons=fourcirc ring=F2uv n=5 lambda=1 mu=9 a=BB773 b=11383 c=CC8D8 family=W_80 alpha=-308 beta=6 d=14 aut=2^2
id=C_80,31 kind=new cons=fourcirc ring=F2uv n=5 lambda=5 mu=D a=33833 b=D5917 c=6E272 family=W_80 alpha=-284 beta=6 d=14 aut=2^2
id=C_80,32 kind=new cons=fourcirc ring=F2uv n=5 lambda=1 mu=9 a=3FB5D b=53835 c=22CDC family=W_80 alpha=-276 beta=6 d=14 aut=2^2
id=C_80,33 kind=new cons=fourcirc ring=F2uv n=5 lambda=3 mu=B a=D13F1 b=9A95F c=62126 family=W_80 alpha=-264 beta=6 d=14 aut=2^2
id=C_80,34 kind=new cons=fourcirc ring=F2uv n=5 lambda=1 mu=9 a=B8BBB b=175F9 c=AAEDE family=W_80 alpha=-368 beta=8 d=14 aut=2^2
id=C_80,35 kind=new cons=fourcirc ring=F2uv n=5 lambda=B mu=B a=97DB7 b=87575 c=E6CDC family=W_80 alpha=-352 beta=8 d=14 aut=2^2
id=C_80,36 kind=new cons=fourcirc ring=F2uv n=5 lambda=F mu=9 a=77F7F b=81DBF c=E7EEE family=W_80 alpha=-292 beta=8 d=14 aut=2^2
id=C_80,37 kind=new cons=fourcirc ring=F2uv n=5 lambda=3 mu=B a=D7383 b=1F5B9 c=474C4 family=W_80 alpha=-276 beta=8 d=14 aut=2^2
id=C_80,38 kind=new cons=fourcirc ring=F2uv n=5 lambda=5 mu=B a=7F4FF b=5717B c=8888D family=W_80 alpha=-384 beta=18 d=14 aut=2^2
id=C_80,39 kind=new cons=fourcirc ring=F2uv n=5 lambda=1 mu=9 a=BB71B b=FF109 c=6F666 family=W_80 alpha=-376 beta=18 d=14 aut=2^2
id=C_80,40 kind=new cons=fourcirc ring=F2uv n=5 lambda=F mu=7 a=89F17 b=FF993 c=266A7 family=W_80 alpha=-364 beta=18 d=14 aut=2^2
id=C_80,41 kind=new cons=fourcirc ring=F2uv n=5 lambda=5 mu=D a=15D2D b=17733 c=252E6 family=W_80 alpha=-360 beta=18 d=14 aut=2^2
id=C_80,42 kind=new cons=fourcirc ring=F4 n=10 lambda=1 mu=1 a=2023113102 b=1313111210 c=1110131210 family=W_80 alpha=-460 beta=0 d=14 aut=2^2*5
id=C_80,43 kind=new cons=fourcirc ring=F4 n=10 lambda=1 mu=1 a=3121330000 b=2033021032 c=0320320302 family=W_80 alpha=-290 beta=5 d=14 aut=2*5
id=C_80,44 kind=new cons=fourcirc ring=F4 n=10 lambda=1 mu=1 a=0313022300 b=2111212100 c=1002013132 family=W_80 alpha=-260 beta=5 d=14 aut=2^2*5
id=C_80,45 kind=new cons=fourcirc ring=F4 n=10 lambda=1 mu=1 a=2231100000 b=1230010333 c=2001231310 family=W_80 alpha=-250 beta=5 d=14 aut=2^2*5
id=C_80,46 kind=new cons=fourcirc ring=F4 n=10 lambda=1 mu=1 a=2311211101 b=0100120321 c=0100010203 family=W_80 alpha=-240 beta=5 d=14 aut=2*5
id=C_80,47 kind=new cons=fourcirc ring=F4 n=10 lambda=1 mu=1 a=2312300112 b=0022222123 c=3333103120 family=W_80 alpha=-220 beta=5 d=14 aut=2*5
id=C_80,48 kind=new cons=fourcirc ring=F4 n=10 lambda=1 mu=1 a=0303110323 b=1231311133 c=0230132110 family=W_80 alpha=-210 beta=5 d=14 aut=2^2*5
id=C_80,49 kind=new cons=fourcirc ring=F4 n=10 lambda=1 mu=1 a=3213321031 b=0010131103 c=1203122220 family=W_80 alpha=-200 beta=5 d=14 aut=2*5
id=C_80,50 kind=new cons=fourcirc ring=F4 n=10 lambda=1 mu=1 a=0203231321 b=2031110022 c=0232110031 family=W_80 alpha=-190 beta=5 d=14 aut=2*5
id=C_92,1 kind=new cons=fourcirc ring=F2 n=23 lambda=1 mu=1 a=00001001000010001001111 b=10101111101000110001110 c=00011010000001011011100 family=W_92,1 alpha=1794 beta=-69 d=16 aut=2*23
id=C_92,2 kind=new cons=fourcirc ring=F2 n=23 lambda=1 mu=1 a=00001011001101011000110 b=00101011100111001111111 c=00000000000000000001000 family=W_92,1 alpha=1403 beta=-46 d=16 aut=2*23
id=C_92,3 kind=new cons=fourcirc ring=F2 n=23 lambda=1 mu=1 a=10111011011110001100111 b=01000011000001010111101 c=11111001011011100000101 family=W_92,1 alpha=1587 beta=-46 d=16 aut=2*23
id=C_92,4 kind=new cons=fourcirc ring=F2 n=23 lambda=1 mu=1 a=10111000101000001011000 b=01100110111111101001111 c=10101000100101111011101 family=W_92,1 alpha=1817 beta=-46 d=16 aut=2*23
id=C_92,5 kind=new cons=fourcirc ring=F2 n=23 lambda=1 mu=1 a=11111010100111001110011 b=11110100110110011010011 c=00000000000000000100000 family=W_92,1 alpha=1886 beta=-46 d=16 aut=2*23
id=C_92,6 kind=new cons=fourcirc ring=F2 n=23 lambda=1 mu=1 a=01011100110111010011100 b=01001000010010010101100 c=10001010011110100011111 family=W_92,1 alpha=1955 beta=-46 d=16 aut=23
id=C_92,7 kind=new cons=fourcirc ring=F2 n=23 lambda=1 mu=1 a=10110110101001111101110 b=01100100101000011001110 c=01010110111011011000110 family=W_92,1 alpha=1104 beta=-23 d=16 aut=23
id=C_92,8 kind=new cons=fourcirc ring=F2 n=23 lambda=1 mu=1 a=10000001101101000000011 b=10011010001000111111011 c=00000000000001000000000 family=W_92,1 alpha=1311 beta=-23 d=16 aut=2*23
id=C_92,9 kind=new cons=fourcirc ring=F2 n=23 lambda=1 mu=1 a=00101001110111010101110 b=10000011110100111101010 c=00000000000000000010000 family=W_92,1 alpha=1541 beta=-23 d=16 aut=2*23
id=C_92,10 kind=new cons=fourcirc ring=F2 n=23 lambda=1 mu=1 a=11011001100001010001000 b=00101000101111101010110 c=00100000000000000000000 family=W_92,1 alpha=1748 beta=-23 d=16 aut=2*23
id=C_92,11 kind=new cons=fourcirc ring=F2 n=23 lambda=1 mu=1 a=00111010000001101000100 b=01100001101101000100001 c=11000001011111100101101 family=W_92,1 alpha=713 beta=0 d=16 aut=2*23
id=C_92,12 kind=new cons=fourcirc ring=F2 n=23 lambda=1 mu=1 a=01101110111110110010111 b=00111011110010101111000 c=00000000000000010000000 family=W_92,1 alpha=1311 beta=0 d=16 aut=2*23
)CATALOG";

}  // namespace sdcirc
