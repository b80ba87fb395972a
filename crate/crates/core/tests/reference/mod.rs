// Reference values generated with mpmath 40-digit arithmetic.
pub const BESSEL_K: &[(f64, f64, f64)] = &[
    (0.0, 1e-06, 13.9314420736264195),
    (0.0, 0.001, 7.02368880056238132),
    (0.0, 0.1, 2.42706902470201656),
    (0.0, 0.9, 0.486730308162900506),
    (0.0, 1.99, 0.1153017675517768),
    (0.0, 2.0, 0.113893872749533436),
    (0.0, 3.7, 0.0156306599216266585),
    (0.0, 10.0, 0.0000177800623161676518),
    (0.0, 55.0, 2.19131021835341508e-25),
    (0.0, 200.0, 1.22568197977653345e-88),
    (0.25, 1e-06, 68.1072278897349473),
    (0.25, 0.001, 11.7564762719344586),
    (0.25, 0.1, 2.6851568718760592),
    (0.25, 0.9, 0.498927929629470189),
    (0.25, 1.99, 0.1168109928704631),
    (0.25, 2.0, 0.115378276840856757),
    (0.25, 3.7, 0.0157489862120944494),
    (0.25, 10.0, 0.0000178331844398063923),
    (0.25, 55.0, 2.19254452432702791e-25),
    (0.25, 200.0, 1.22587303124035014e-88),
    (0.5, 1e-06, 1253.31288400198962),
    (0.5, 0.001, 39.5936595131166432),
    (0.5, 0.1, 3.58616683879726003),
    (0.5, 0.9, 0.537122876942768012),
    (0.5, 1.99, 0.121447165002722165),
    (0.5, 2.0, 0.119937771968061447),
    (0.5, 3.7, 0.0161090338254873232),
    (0.5, 10.0, 0.0000179934780937051796),
    (0.5, 55.0, 2.19625159087724564e-25),
    (0.5, 200.0, 1.22644636403464943e-88),
    (1.0, 1e-06, 999999.999992784324),
    (1.0, 0.001, 999.996238156085553),
    (1.0, 0.1, 9.85384478087060557),
    (1.0, 0.9, 0.716533578776019046),
    (1.0, 1.99, 0.141717561622401307),
    (1.0, 2.0, 0.139865881816522427),
    (1.0, 3.7, 0.0176280351022232631),
    (1.0, 10.0, 0.0000186487734538255846),
    (1.0, 55.0, 2.21114227161174654e-25),
    (1.0, 200.0, 1.22874237347298581e-88),
    (1.5, 1e-06, 1253314137.31487368),
    (1.5, 0.001, 39633.253172629759),
    (1.5, 0.1, 39.4478352267698583),
    (1.5, 0.9, 1.13392607354584357),
    (1.5, 1.99, 0.182475891134743354),
    (1.5, 2.0, 0.179906657952092171),
    (1.5, 3.7, 0.0204628267512947076),
    (1.5, 10.0, 0.0000197928259030756976),
    (1.5, 55.0, 2.23618343798410465e-25),
    (1.5, 200.0, 1.23257859585482268e-88),
    (2.0, 1e-06, 1999999999999.50018),
    (2.0, 0.001, 1999999.50000097163),
    (2.0, 0.1, 199.503964642114117),
    (2.0, 0.9, 2.07902714988738724),
    (2.0, 1.99, 0.257731477725044446),
    (2.0, 2.0, 0.253759754566055863),
    (2.0, 3.7, 0.0251593275444500435),
    (2.0, 10.0, 0.0000215098170069327687),
    (2.0, 55.0, 2.2717153918665695e-25),
    (2.0, 200.0, 1.23796940351126331e-88),
    (3.3, 1e-06, 8.33797244399847837e+20),
    (3.3, 0.001, 104968842516.246609),
    (3.3, 0.1, 26338.3517175649121),
    (3.3, 0.9, 17.1759407472712066),
    (3.3, 1.99, 0.927033522174589794),
    (3.3, 2.0, 0.908574251808749306),
    (3.3, 3.7, 0.0555128367007482169),
    (3.3, 10.0, 0.0000297910768637269145),
    (3.3, 55.0, 2.41714896560875708e-25),
    (3.3, 200.0, 1.2594235320330487e-88),
    (7.0, 1e-06, 4.60799999999980946e+46),
    (7.0, 0.001, 4.60799980800000413e+25),
    (7.0, 0.1, 460608047990.001904),
    (7.0, 0.9, 93155.0468987683335),
    (7.0, 1.99, 316.959317328582548),
    (7.0, 2.0, 305.538017682962241),
    (7.0, 3.7, 2.82123626210180541),
    (7.0, 10.0, 0.000172025794560757395),
    (7.0, 55.0, 3.40557760428121386e-25),
    (7.0, 200.0, 1.38497278139835958e-88),
    (12.5, 1e-06, 3.96340722405738832e+86),
    (12.5, 0.001, 1.25333938503218252e+49),
    (12.5, 0.1, 1.25306697962253993e+24),
    (12.5, 0.9, 1453437515675.40417),
    (12.5, 1.99, 66860352.2846369153),
    (12.5, 2.0, 62745634.5309992228),
    (12.5, 3.7, 23337.6476923447319),
    (12.5, 10.0, 0.0170141753419921057),
    (12.5, 55.0, 8.90464812337681011e-25),
    (12.5, 200.0, 1.80945547940479263e-88),
    (20.0, 1e-06, 6.37770664031449302e+142),
    (20.0, 0.001, 6.37770655639737645e+82),
    (20.0, 0.1, 6.37686752666117857e+42),
    (20.0, 0.9, 5.19023538678889798e+23),
    (20.0, 1.99, 63827235131308938.6),
    (20.0, 2.0, 57708568527002410.0),
    (20.0, 3.7, 230561041734.119764),
    (20.0, 10.0, 178.744278207705481),
    (20.0, 55.0, 7.76170081156594401e-24),
    (20.0, 200.0, 3.32075523908556136e-88),
    (35.0, 1e-06, 5.07206086632653071e+258),
    (35.0, 0.001, 5.07206082903199123e+153),
    (35.0, 0.1, 5.07168793480097571e+83),
    (35.0, 0.9, 2.01423553140952273e+50),
    (35.0, 1.99, 1.70878098229258422e+38),
    (35.0, 2.0, 1.4333984367254626e+38),
    (35.0, 3.7, 5.94940676968723398e+28),
    (35.0, 10.0, 24507753275579.7569),
    (35.0, 55.0, 9.87319941040107337e-21),
    (35.0, 200.0, 2.58097074475849876e-87),
    (50.0, 0.001, 3.42432245278016109e+227),
    (50.0, 0.1, 3.42414776447074078e+127),
    (50.0, 0.9, 6.61689849557703539e+79),
    (50.0, 1.99, 3.82955171024461924e+62),
    (50.0, 2.0, 2.97998173960492171e+62),
    (50.0, 3.7, 1.24215656466689815e+49),
    (50.0, 10.0, 2.06137377538925753e+27),
    (50.0, 55.0, 3.90623244857110507e-16),
    (50.0, 200.0, 6.05745889756993981e-86),
];
pub const UPPER_GAMMA: &[(f64, f64, f64)] = &[
    (0.05, 0.0, 19.4700853112555118),
    (0.05, 1e-05, 8.22326416306648395),
    (0.05, 0.3, 0.888203448910256027),
    (0.05, 1.0, 0.224366506005373199),
    (0.05, 2.5, 0.0264136753112605178),
    (0.05, 7.0, 0.000128015968550776228),
    (0.05, 20.0, 1.14509829240072187e-10),
    (0.05, 80.0, 2.77613496317798116e-37),
    (0.5, 0.0, 1.77245385090551603),
    (0.5, 1e-05, 1.76612931666696709),
    (0.5, 0.3, 0.777359311249808052),
    (0.5, 1.0, 0.278805585280661976),
    (0.5, 2.5, 0.044926952600007936),
    (0.5, 7.0, 0.00032402341041512844),
    (0.5, 20.0, 4.50137447327737847e-10),
    (0.5, 80.0, 2.00550280125390333e-36),
    (1.0, 0.0, 1.0),
    (1.0, 1e-05, 0.999990000049999833),
    (1.0, 0.3, 0.740818220681717874),
    (1.0, 1.0, 0.367879441171442322),
    (1.0, 2.5, 0.0820849986238987952),
    (1.0, 7.0, 0.000911881965554516208),
    (1.0, 20.0, 2.06115362243855783e-9),
    (1.0, 80.0, 1.80485138784541517e-35),
    (2.0, 0.0, 1.0),
    (2.0, 1e-05, 0.999999999950000333),
    (2.0, 0.3, 0.963063686886233228),
    (2.0, 1.0, 0.735758882342884643),
    (2.0, 2.5, 0.287297495183645783),
    (2.0, 7.0, 0.00729505572443612966),
    (2.0, 20.0, 4.32842260712097144e-8),
    (2.0, 80.0, 1.46192962415478629e-33),
    (3.5, 0.0, 3.32335097044784255),
    (3.5, 1e-05, 3.32335097044784255),
    (3.5, 0.3, 3.32000019228840635),
    (3.5, 1.0, 3.18988642089419804),
    (3.5, 2.5, 2.19328943986438685),
    (3.5, 7.0, 0.170093600534145067),
    (3.5, 20.0, 4.18340225546085468e-6),
    (3.5, 80.0, 1.06605250949852554e-30),
    (8.0, 0.0, 5040.0),
    (8.0, 1e-05, 5040.0),
    (8.0, 0.3, 5039.99999371559781),
    (8.0, 1.0, 5039.94834404875981),
    (8.0, 2.5, 5018.59665473370369),
    (8.0, 7.0, 3017.51773103610513),
    (8.0, 20.0, 3.92409401583710971),
    (8.0, 80.0, 4.14271181535366682e-22),
    (25.0, 0.0, 6.20448401733239439e+23),
    (25.0, 1e-05, 6.20448401733239439e+23),
    (25.0, 0.3, 6.20448401733239439e+23),
    (25.0, 1.0, 6.20448401733239439e+23),
    (25.0, 2.5, 6.20448401733239407e+23),
    (25.0, 7.0, 6.20448335111814708e+23),
    (25.0, 20.0, 5.23179079085620673e+23),
    (25.0, 80.0, 120877837084.622008),
    (60.0, 0.0, 1.38683118545689836e+80),
    (60.0, 1e-05, 1.38683118545689836e+80),
    (60.0, 0.3, 1.38683118545689836e+80),
    (60.0, 1.0, 1.38683118545689836e+80),
    (60.0, 2.5, 1.38683118545689836e+80),
    (60.0, 7.0, 1.38683118545689836e+80),
    (60.0, 20.0, 1.38683118545631127e+80),
    (60.0, 80.0, 1.19233327875654517e+78),
];
