"""Exact Maclaurin coefficients (generated by tools/gen_series_tables.py)."""

from fractions import Fraction

M_MAX = 22

# tanh u = sum t_m u^(2m-1); |t_m| <= (pi^2/3) (4/pi^2)^m
TANH_COEFFS = [
    Fraction(1, 1),
    Fraction(-1, 3),
    Fraction(2, 15),
    Fraction(-17, 315),
    Fraction(62, 2835),
    Fraction(-1382, 155925),
    Fraction(21844, 6081075),
    Fraction(-929569, 638512875),
    Fraction(6404582, 10854718875),
    Fraction(-443861162, 1856156927625),
    Fraction(18888466084, 194896477400625),
    Fraction(-113927491862, 2900518163668125),
    Fraction(58870668456604, 3698160658676859375),
    Fraction(-8374643517010684, 1298054391195577640625),
    Fraction(689005380505609448, 263505041412702261046875),
    Fraction(-129848163681107301953, 122529844256906551386796875),
    Fraction(1736640792209901647222, 4043484860477916195764296875),
    Fraction(-418781231495293038913922, 2405873491984360136479756640625),
    Fraction(56518638202982204522669764, 801155872830791925447758961328125),
    Fraction(-32207686319158956594455462, 1126482925555250126673224649609375),
    Fraction(1410211493828985228276049834684, 121699582862361447435141825020548828125),
    Fraction(-516098083439704913515348955653804, 109894723324712387033933067993555591796875),
]

# ln cosh u = sum a_m u^(2m); a_m = t_m / (2m)
LNCH_COEFFS = [
    Fraction(1, 2),
    Fraction(-1, 12),
    Fraction(1, 45),
    Fraction(-17, 2520),
    Fraction(31, 14175),
    Fraction(-691, 935550),
    Fraction(10922, 42567525),
    Fraction(-929569, 10216206000),
    Fraction(3202291, 97692469875),
    Fraction(-221930581, 18561569276250),
    Fraction(9444233042, 2143861251406875),
    Fraction(-56963745931, 34806217964017500),
    Fraction(29435334228302, 48076088562799171875),
    Fraction(-2093660879252671, 9086380738369043484375),
    Fraction(344502690252804724, 3952575621190533915703125),
    Fraction(-129848163681107301953, 3920955016221009644377500000),
    Fraction(868320396104950823611, 68739242628124575327993046875),
    Fraction(-209390615747646519456961, 43305722855718482456635619531250),
    Fraction(28259319101491102261334882, 15221961583785046583507420265234375),
    Fraction(-16103843159579478297227731, 22529658511105002533464492992187500),
    Fraction(705105746914492614138024917342, 2555691240109590396137978325431525390625),
    Fraction(-129024520859926228378837238913451, 1208841956571836257373263747929111509765625),
]

# y coth y = sum c_k y^(2k), c_0 = 1; |c_k| <= 2 zeta(2) pi^(-2k)
YCOTH_COEFFS = [
    Fraction(1, 1),
    Fraction(1, 3),
    Fraction(-1, 45),
    Fraction(2, 945),
    Fraction(-1, 4725),
    Fraction(2, 93555),
    Fraction(-1382, 638512875),
    Fraction(4, 18243225),
    Fraction(-3617, 162820783125),
    Fraction(87734, 38979295480125),
    Fraction(-349222, 1531329465290625),
    Fraction(310732, 13447856940643125),
    Fraction(-472728182, 201919571963756521875),
    Fraction(2631724, 11094481976030578125),
    Fraction(-13571120588, 564653660170076273671875),
    Fraction(13785346041608, 5660878804669082674070015625),
    Fraction(-7709321041217, 31245110285511170603633203125),
    Fraction(303257395102, 12130454581433748587292890625),
    Fraction(-52630543106106954746, 20777977561866588586487628662044921875),
    Fraction(616840823966644, 2403467618492375776343276883984375),
    Fraction(-522165436992898244102, 20080431172289638826798401128390556640625),
    Fraction(6080390575672283210764, 2307789189818960127712594427864667427734375),
    Fraction(-10121188937927645176372, 37913679547025773526706908457776679169921875),
]
