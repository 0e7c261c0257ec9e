// (x, Γ(x))
pub const GAMMA_TABLE: &[(f64, f64)] = &[
    (-19.95, 9.5996668611467036306e-18),
    (-19.25, 1.7352291144367383148e-17),
    (-18.55, -9.9014835519698709944e-17),
    (-17.85, 1.6733277901140055721e-15),
    (-17.15, 1.265586132624463759e-14),
    (-16.45, -4.2792966364155085072e-14),
    (-15.75, 4.2717557314401947464e-13),
    (-15.05, 1.3389442606181541183e-11),
    (-14.35, -1.5795468480073915424e-11),
    (-13.649999999999999, 1.0268826557252384013e-10),
    (-12.95, -3.6729796262333595655e-9),
    (-12.25, -4.9203214826628013645e-9),
    (-11.55, 2.0525592899700574631e-8),
    (-10.85, -2.4983088189626987959e-7),
    (-10.15, -1.3386724614781742871e-6),
    (-9.45, 3.1488214731819532176e-6),
    (-8.75, -0.000021426084765762825407),
    (-8.05, -0.00044745544750654975779),
    (-7.35, 0.00034274168956461559043),
    (-6.65, -0.0014048319783766424808),
    (-5.949999999999999, 0.030624454499433470425),
    (-5.25, 0.02403364606908169999),
    (-4.550000000000001, -0.056050678721707852994),
    (-3.8500000000000014, 0.36050657785089514389),
    (-3.150000000000002, 0.95226003451592708975),
    (-2.4499999999999993, -1.0109464500640093537),
    (-1.75, 2.7623694538833587139),
    (-1.0500000000000007, 19.646729850076520495),
    (-0.3500000000000014, -3.9565574343614487914),
    (0.34999999999999787, 2.5461469772123041529),
    (1.0500000000000007, 0.97350426556277529883),
    (1.75, 0.91906252684888323385),
    (2.4499999999999993, 1.2842090013930538934),
    (3.1499999999999986, 2.3069437021632451474),
    (3.849999999999998, 4.9857349276016526716),
    (4.550000000000001, 12.472045113660874706),
    (5.25, 35.211611852799685705),
    (5.949999999999999, 110.21281728662589345),
    (6.649999999999999, 377.41830402519642028),
    (7.349999999999998, 1399.6347490150692),
    (8.05, 5575.3450607030286189),
    (8.75, 23698.125701742705881),
    (9.45, 106893.20497855027869),
    (10.149999999999999, 509287.1707883059856),
    (10.849999999999998, 2552861.4700454919475),
    (11.549999999999997, 13416902.08798020046),
    (12.249999999999996, 73711509.046769303788),
    (12.95, 422210610.77537284898),
    (13.649999999999995, 2515449012.1769273451),
    (14.349999999999998, 15555521531.418924867),
    (15.05, 99659437919.788933558),
    (15.749999999999996, 660355655453.75831181),
    (16.45, 4518472578222.474089),
    (17.149999999999995, 31882126158648.275208),
    (17.849999999999998, 231677502943925.28448),
    (18.55, 1731752252929828.6227),
    (19.249999999999996, 13300786146933703.852),
    (19.95, 104862056207714027.26),
    (20.649999999999995, 847813787623635331.51),
    (21.349999999999998, 7023337601767623724.7),
    (22.05, 59565256570511110452.0),
    (22.749999999999996, 5.1679388102348539695e+20),
    (23.45, 4.5835916005968364666e+21),
    (24.149999999999995, 4.1530480526548629813e+22),
    (24.849999999999998, 3.8417229154748540484e+23),
    (25.55, 3.6259723816779640407e+24),
    (26.249999999999996, 3.489941157439386917e+25),
    (26.95, 3.4235442144894689461e+26),
    (27.649999999999995, 3.4212065084930479031e+27),
    (28.349999999999998, 3.4811337996756175986e+28),
    (29.05, 3.6049829406512376357e+29),
    (29.749999999999996, 3.7978642495044569155e+30),
    (30.45, 4.0686563258496788723e+31),
    (31.149999999999995, 4.4306544712569729072e+32),
    (31.849999999999998, 4.9026149984095114975e+33),
    (32.55, 5.5103057966666463815e+34),
    (33.25, 6.2887359653748807734e+35),
    (33.95, 7.2853236895276378118e+36),
    (34.64999999999999, 8.564385284304005356e+37),
    (35.349999999999994, 1.0213509331955104167e+39),
    (36.05, 1.2352648049441567173e+40),
    (36.75, 1.5147159328691640501e+41),
    (37.45, 1.8826638150668822944e+42),
    (38.14999999999999, 2.3712295615964154463e+43),
    (38.849999999999994, 3.025705060126066396e+44),
    (39.55, 3.9104665930105096475e+45),
    (40.25, 5.1177621318451415184e+46),
    (40.95, 6.7808661916494760747e+47),
    (41.64999999999999, 9.0939208314983226863e+48),
    (42.349999999999994, 1.2342086545205810446e+50),
    (43.05, 1.6947706348754127498e+51),
    (43.75, 2.3541522408599221028e+52),
    (44.44999999999999, 3.3073372739498108366e+53),
    (45.14999999999999, 4.6985557617149070638e+54),
    (45.849999999999994, 6.7486411383124998809e+55),
    (46.55, 9.7985264214375417093e+56),
    (47.249999999999986, 1.437892289257495794e+58),
    (47.94999999999999, 2.1322783712125605111e+59),
    (48.64999999999999, 3.1948189848141719536e+60),
    (49.349999999999994, 4.8357987619255444734e+61),
    (50.05, 7.3934384251418094515e+62),
    (-1.00001, 99999.577229128134),
    (-2.999999, -166666.87599669706757),
    (1e-05, 99999.422794225559493),
    (-1e-05, -100000.57722555554405),
    (49.5, 8.6676018431352723453e+61),
];

// (a, b, c, z, ₂F₁(a, b; c; z))
pub const HYP_TABLE: &[(f64, f64, f64, f64, f64)] = &[
    (4.5, -3.0, 0.5, -0.3, 20.326599999999998784),
    (4.5, -3.0, 0.5, -2.0, 1137.4),
    (4.5, -3.0, 0.5, -4.5, 9945.775),
    (4.5, -3.0, 0.5, -50.0, 10973851.0),
    (4.5, -3.0, 0.5, -10000.0, 85809900270001.0),
    (4.5, -3.0, 0.5, -100000000.0, 8.58000009900000027e+25),
    (4.5, -3.0, 0.5, -1000000000000.0, 8.5800000000099e+37),
    (5.0, -2.5, 1.5, -0.3, 4.9771159399481788606),
    (5.0, -2.5, 1.5, -2.0, 107.95087511442080458),
    (5.0, -2.5, 1.5, -4.5, 629.30378877619728066),
    (5.0, -2.5, 1.5, -50.0, 208306.1203714263155),
    (5.0, -2.5, 1.5, -10000.0, 115176896121.49387806),
    (5.0, -2.5, 1.5, -100000000.0, 1.1516360897932537645e+21),
    (5.0, -2.5, 1.5, -1000000000000.0, 1.1516360765064739641e+31),
    (0.5, 4.0, 1.5, -0.3, 0.7254155776161415404),
    (0.5, 4.0, 1.5, -2.0, 0.34458479771350014276),
    (0.5, 4.0, 1.5, -4.5, 0.23121379088264573016),
    (0.5, 4.0, 1.5, -50.0, 0.069420024417533159401),
    (0.5, 4.0, 1.5, -10000.0, 0.0049087385212340376538),
    (0.5, 4.0, 1.5, -100000000.0, 0.000049087385212340519351),
    (0.5, 4.0, 1.5, -1000000000000.0, 4.9087385212340519351e-7),
    (2.5, -1.0, 0.5, -0.3, 2.4999999999999999445),
    (2.5, -1.0, 0.5, -2.0, 11.0),
    (2.5, -1.0, 0.5, -4.5, 23.5),
    (2.5, -1.0, 0.5, -50.0, 251.0),
    (2.5, -1.0, 0.5, -10000.0, 50001.0),
    (2.5, -1.0, 0.5, -100000000.0, 500000001.0),
    (2.5, -1.0, 0.5, -1000000000000.0, 5000000000001.0),
    (3.0, -0.5, 1.5, -0.3, 1.2701898206800156593),
    (3.0, -0.5, 1.5, -2.0, 2.2890744797239157571),
    (3.0, -0.5, 1.5, -4.5, 3.2625186588081898441),
    (3.0, -0.5, 1.5, -50.0, 10.454658692711964356),
    (3.0, -0.5, 1.5, -10000.0, 147.26510088013426992),
    (3.0, -0.5, 1.5, -100000000.0, 14726.215593154586933),
    (3.0, -0.5, 1.5, -1000000000000.0, 1472621.5563705101048),
    (0.5, 2.0, 1.5, -0.3, 0.84204862923817056375),
    (0.5, 2.0, 1.5, -2.0, 0.50442209609468664818),
    (0.5, 2.0, 1.5, -4.5, 0.35731997675708666187),
    (0.5, 2.0, 1.5, -50.0, 0.1109418729429076233),
    (0.5, 2.0, 1.5, -10000.0, 0.0078539783010411069101),
    (0.5, 2.0, 1.5, -100000000.0, 0.000078539816339711497629),
    (0.5, 2.0, 1.5, -1000000000000.0, 7.8539816339744830928e-7),
    (2.0, -0.5, 0.5, -0.3, 1.5270745355451227167),
    (2.0, -0.5, 0.5, -2.0, 3.3598659099014532224),
    (2.0, -0.5, 0.5, -4.5, 5.0056378680388517534),
    (2.0, -0.5, 0.5, -50.0, 16.660888784573398396),
    (2.0, -0.5, 0.5, -10000.0, 235.6194490212342072),
    (2.0, -0.5, 0.5, -100000000.0, 23561.944901923449288),
    (2.0, -0.5, 0.5, -1000000000000.0, 2356194.4901923449288),
    (2.5, 0.0, 1.5, -0.3, 1.0),
    (2.5, 0.0, 1.5, -2.0, 1.0),
    (2.5, 0.0, 1.5, -4.5, 1.0),
    (2.5, 0.0, 1.5, -50.0, 1.0),
    (2.5, 0.0, 1.5, -10000.0, 1.0),
    (2.5, 0.0, 1.5, -100000000.0, 1.0),
    (2.5, 0.0, 1.5, -1000000000000.0, 1.0),
    (0.5, 1.5, 1.5, -0.3, 0.87705801930702921847),
    (0.5, 1.5, 1.5, -2.0, 0.57735026918962576451),
    (0.5, 1.5, 1.5, -4.5, 0.4264014327112208686),
    (0.5, 1.5, 1.5, -50.0, 0.14002800840280098035),
    (0.5, 1.5, 1.5, -10000.0, 0.0099995000374968752734),
    (0.5, 1.5, 1.5, -100000000.0, 0.00009999999950000000375),
    (0.5, 1.5, 1.5, -1000000000000.0, 9.999999999995e-7),
    (1.8333333333333333, -0.33333333333333326, 0.5, -0.3, 1.3112999006802992827),
    (1.8333333333333333, -0.33333333333333326, 0.5, -2.0, 2.2492546775291900614),
    (1.8333333333333333, -0.33333333333333326, 0.5, -4.5, 2.9576226619325050612),
    (1.8333333333333333, -0.33333333333333326, 0.5, -50.0, 6.6497457115325771819),
    (1.8333333333333333, -0.33333333333333326, 0.5, -10000.0, 38.92483884186666938),
    (1.8333333333333333, -0.33333333333333326, 0.5, -100000000.0, 838.61422459793018882),
    (1.8333333333333333, -0.33333333333333326, 0.5, -1000000000000.0, 18067.39577888235175),
    (2.333333333333333, 0.16666666666666674, 1.5, -0.3, 0.93656680697337052273),
    (2.333333333333333, 0.16666666666666674, 1.5, -2.0, 0.77965366858142694979),
    (2.333333333333333, 0.16666666666666674, 1.5, -4.5, 0.69328299533654112499),
    (2.333333333333333, 0.16666666666666674, 1.5, -50.0, 0.46956811802580744085),
    (2.333333333333333, 0.16666666666666674, 1.5, -10000.0, 0.19436491678288704375),
    (2.333333333333333, 0.16666666666666674, 1.5, -100000000.0, 0.041874851348470323884),
    (2.333333333333333, 0.16666666666666674, 1.5, -1000000000000.0, 0.0090216632428028814919),
    (0.5, 1.3333333333333333, 1.5, -0.3, 0.88933694207226283074),
    (0.5, 1.3333333333333333, 1.5, -2.0, 0.60679172060293226346),
    (0.5, 1.3333333333333333, 1.5, -4.5, 0.45666267030175932242),
    (0.5, 1.3333333333333333, 1.5, -50.0, 0.15520905303629696115),
    (0.5, 1.3333333333333333, 1.5, -10000.0, 0.011199728218804943081),
    (0.5, 1.3333333333333333, 1.5, -100000000.0, 0.00011202511710671996641),
    (0.5, 1.3333333333333333, 1.5, -1000000000000.0, 1.1202513002732802826e-6),
    (1.5, 0.0, 0.5, -0.3, 1.0),
    (1.5, 0.0, 0.5, -2.0, 1.0),
    (1.5, 0.0, 0.5, -4.5, 1.0),
    (1.5, 0.0, 0.5, -50.0, 1.0),
    (1.5, 0.0, 0.5, -10000.0, 1.0),
    (1.5, 0.0, 0.5, -100000000.0, 1.0),
    (1.5, 0.0, 0.5, -1000000000000.0, 1.0),
    (2.0, 0.5, 1.5, -0.3, 0.84204862923817056375),
    (2.0, 0.5, 1.5, -2.0, 0.50442209609468664818),
    (2.0, 0.5, 1.5, -4.5, 0.35731997675708666187),
    (2.0, 0.5, 1.5, -50.0, 0.1109418729429076233),
    (2.0, 0.5, 1.5, -10000.0, 0.0078539783010411069101),
    (2.0, 0.5, 1.5, -100000000.0, 0.000078539816339711497629),
    (2.0, 0.5, 1.5, -1000000000000.0, 7.8539816339744830928e-7),
    (0.5, 1.0, 1.5, -0.3, 0.91486648924557189017),
    (0.5, 1.0, 1.5, -2.0, 0.67551085885603996302),
    (0.5, 1.0, 1.5, -4.5, 0.53282177169599150556),
    (0.5, 1.0, 1.5, -50.0, 0.20227590274856034463),
    (0.5, 1.0, 1.5, -10000.0, 0.01560796660108231381),
    (0.5, 1.0, 1.5, -100000000.0, 0.00015706963267952299526),
    (0.5, 1.0, 1.5, -1000000000000.0, 1.5707953267948966196e-6),
    (1.25, 0.25, 0.5, -0.3, 0.85332878117084408694),
    (1.25, 0.25, 0.5, -2.0, 0.5513448241015830097),
    (1.25, 0.25, 0.5, -4.5, 0.42529377951263934405),
    (1.25, 0.25, 0.5, -50.0, 0.20794723052821440543),
    (1.25, 0.25, 0.5, -10000.0, 0.053947573677208576564),
    (1.25, 0.25, 0.5, -100000000.0, 0.0053935262281758795942),
    (1.25, 0.25, 0.5, -1000000000000.0, 0.0005393526011914737065),
    (1.75, 0.75, 1.5, -0.3, 0.79607258876405443409),
    (1.75, 0.75, 1.5, -2.0, 0.39240449931411214844),
    (1.75, 0.75, 1.5, -4.5, 0.2390000884422681938),
    (1.75, 0.75, 1.5, -50.0, 0.041940431912383455145),
    (1.75, 0.75, 1.5, -10000.0, 0.00078698068894157587435),
    (1.75, 0.75, 1.5, -100000000.0, 7.8689375496316883376e-7),
    (1.75, 0.75, 1.5, -1000000000000.0, 7.8689373268098497852e-10),
    (0.5, 0.75, 1.5, -0.3, 0.93490444272951877007),
    (0.5, 0.75, 1.5, -2.0, 0.73747077040318485013),
    (0.5, 0.75, 1.5, -4.5, 0.60825788580312752736),
    (0.5, 0.75, 1.5, -50.0, 0.26476505175572884596),
    (0.5, 0.75, 1.5, -10000.0, 0.024220605541462957313),
    (0.5, 0.75, 1.5, -100000000.0, 0.00026020575543221198103),
    (0.5, 0.75, 1.5, -1000000000000.0, 2.6200575542921201105e-6),
    (1.1666666666666665, 0.33333333333333337, 0.5, -0.3, 0.81871810801445463525),
    (1.1666666666666665, 0.33333333333333337, 0.5, -2.0, 0.45819713501615230051),
    (1.1666666666666665, 0.33333333333333337, 0.5, -4.5, 0.31792857810779672246),
    (1.1666666666666665, 0.33333333333333337, 0.5, -50.0, 0.11295487487073258),
    (1.1666666666666665, 0.33333333333333337, 0.5, -10000.0, 0.018003984736540711162),
    (1.1666666666666665, 0.33333333333333337, 0.5, -100000000.0, 0.00083471087844554652258),
    (1.1666666666666665, 0.33333333333333337, 0.5, -1000000000000.0, 0.000038743823889421761897),
    (1.6666666666666665, 0.8333333333333334, 1.5, -0.3, 0.7850703731408088212),
    (1.6666666666666665, 0.8333333333333334, 1.5, -2.0, 0.36763665458844319691),
    (1.6666666666666665, 0.8333333333333334, 1.5, -4.5, 0.21455311448516571311),
    (1.6666666666666665, 0.8333333333333334, 1.5, -50.0, 0.031505947656694859128),
    (1.6666666666666665, 0.8333333333333334, 1.5, -10000.0, 0.00037994454999271121067),
    (1.6666666666666665, 0.8333333333333334, 1.5, -100000000.0, 1.7630662893600574678e-7),
    (1.6666666666666665, 0.8333333333333334, 1.5, -1000000000000.0, 8.183427270548581245e-11),
    (0.5, 0.6666666666666666, 1.5, -0.3, 0.94176059843265882912),
    (0.5, 0.6666666666666666, 1.5, -2.0, 0.76047444853988560257),
    (0.5, 0.6666666666666666, 1.5, -4.5, 0.63791642633029924891),
    (0.5, 0.6666666666666666, 1.5, -50.0, 0.29457001176506080508),
    (0.5, 0.6666666666666666, 1.5, -10000.0, 0.029966517200733006406),
    (0.5, 0.6666666666666666, 1.5, -100000000.0, 0.00035037283069556064243),
    (0.5, 0.6666666666666666, 1.5, -1000000000000.0, 3.6129759718313759135e-6),
    (1.0714285714285714, 0.4285714285714286, 0.5, -0.3, 0.78729260855065592102),
    (1.0714285714285714, 0.4285714285714286, 0.5, -2.0, 0.37777587198795932219),
    (1.0714285714285714, 0.4285714285714286, 0.5, -4.5, 0.2291745828441808299),
    (1.0714285714285714, 0.4285714285714286, 0.5, -50.0, 0.048508076504803251545),
    (1.0714285714285714, 0.4285714285714286, 0.5, -10000.0, 0.0037294983027323707195),
    (1.0714285714285714, 0.4285714285714286, 0.5, -100000000.0, 0.000071096863318967257659),
    (1.0714285714285714, 0.4285714285714286, 0.5, -1000000000000.0, 1.3726180713209278662e-6),
    (1.5714285714285714, 0.9285714285714286, 1.5, -0.3, 0.77502695179457062079),
    (1.5714285714285714, 0.9285714285714286, 1.5, -2.0, 0.34570163722696951481),
    (1.5714285714285714, 0.9285714285714286, 1.5, -4.5, 0.19346629370885332691),
    (1.5714285714285714, 0.9285714285714286, 1.5, -50.0, 0.023568578792842029752),
    (1.5714285714285714, 0.9285714285714286, 1.5, -10000.0, 0.00017248626208037049925),
    (1.5714285714285714, 0.9285714285714286, 1.5, -100000000.0, 3.3283241814220295e-8),
    (1.5714285714285714, 0.9285714285714286, 1.5, -1000000000000.0, 6.4259764325563833061e-12),
    (0.5, 0.5714285714285714, 1.5, -0.3, 0.94970740337735380303),
    (0.5, 0.5714285714285714, 1.5, -2.0, 0.7883719812794659027),
    (0.5, 0.5714285714285714, 1.5, -4.5, 0.67508899219186140932),
    (0.5, 0.5714285714285714, 1.5, -50.0, 0.33666415981972701162),
    (0.5, 0.5714285714285714, 1.5, -10000.0, 0.040444573941131155406),
    (0.5, 0.5714285714285714, 1.5, -100000000.0, 0.0005792188802223353575),
    (0.5, 0.5714285714285714, 1.5, -1000000000000.0, 6.6974290121426174099e-6),
    (1.0333333333333332, 0.4666666666666667, 0.5, -0.3, 0.77708103294814869878),
    (1.0333333333333332, 0.4666666666666667, 0.5, -2.0, 0.35249033083701977166),
    (1.0333333333333332, 0.4666666666666667, 0.5, -4.5, 0.20207770276148132508),
    (1.0333333333333332, 0.4666666666666667, 0.5, -50.0, 0.031491298191111092321),
    (1.0333333333333332, 0.4666666666666667, 0.5, -10000.0, 0.0013783332809574765366),
    (1.0333333333333332, 0.4666666666666667, 0.5, -100000000.0, 0.000017796517853309688415),
    (1.0333333333333332, 0.4666666666666667, 0.5, -1000000000000.0, 2.418488158133729542e-7),
    (1.5333333333333332, 0.9666666666666667, 1.5, -0.3, 0.77175213218852462672),
    (1.5333333333333332, 0.9666666666666667, 1.5, -2.0, 0.33868755612953965229),
    (1.5333333333333332, 0.9666666666666667, 1.5, -4.5, 0.18683883693298037898),
    (1.5333333333333332, 0.9666666666666667, 1.5, -50.0, 0.021277976907942021014),
    (1.5333333333333332, 0.9666666666666667, 1.5, -10000.0, 0.00012813054267379004051),
    (1.5333333333333332, 0.9666666666666667, 1.5, -100000000.0, 1.7409138815457962244e-8),
    (1.5333333333333332, 0.9666666666666667, 1.5, -1000000000000.0, 2.3665149456203072071e-12),
    (0.5, 0.5333333333333333, 1.5, -0.3, 0.95291978970859660552),
    (0.5, 0.5333333333333333, 1.5, -2.0, 0.8000392281903904336),
    (0.5, 0.5333333333333333, 1.5, -4.5, 0.69102707536641035743),
    (0.5, 0.5333333333333333, 1.5, -50.0, 0.35643756465079855129),
    (0.5, 0.5333333333333333, 1.5, -10000.0, 0.046474378230676531398),
    (0.5, 0.5333333333333333, 1.5, -100000000.0, 0.00075645097595852608511),
    (0.5, 0.5333333333333333, 1.5, -1000000000000.0, 9.7104450980832937943e-6),
    (1.0000625078134768, 0.4999374921865233, 0.5, -0.3, 0.76924454942821311309),
    (1.0000625078134768, 0.4999374921865233, 0.5, -2.0, 0.33336674697430244446),
    (1.0000625078134768, 0.4999374921865233, 0.5, -4.5, 0.18185331245804748251),
    (1.0000625078134768, 0.4999374921865233, 0.5, -50.0, 0.019627820018663387104),
    (1.0000625078134768, 0.4999374921865233, 0.5, -10000.0, 0.00010188429810506978611),
    (1.0000625078134768, 0.4999374921865233, 0.5, -100000000.0, 2.9643870441670101939e-8),
    (1.0000625078134768, 0.4999374921865233, 0.5, -1000000000000.0, 1.9767761584619591652e-10),
    (1.5000625078134768, 0.9999374921865233, 1.5, -0.3, 0.76923519809759396083),
    (1.5000625078134768, 0.9999374921865233, 1.5, -2.0, 0.33334270312856363983),
    (1.5000625078134768, 0.9999374921865233, 1.5, -4.5, 0.18182693858186110944),
    (1.5000625078134768, 0.9999374921865233, 1.5, -50.0, 0.019610707186958705447),
    (1.5000625078134768, 0.9999374921865233, 1.5, -10000.0, 0.0001000352752225180025),
    (1.5000625078134768, 0.9999374921865233, 1.5, -100000000.0, 1.0010269845205754898e-8),
    (1.5000625078134768, 0.9999374921865233, 1.5, -1000000000000.0, 1.0016034505271838451e-12),
    (0.5, 0.5000625078134767, 1.5, -0.3, 0.95574125851323109718),
    (0.5, 0.5000625078134767, 1.5, -2.0, 0.81047715715751114902),
    (0.5, 0.5000625078134767, 1.5, -4.5, 0.70548175037315814929),
    (0.5, 0.5000625078134767, 1.5, -50.0, 0.37531250547987145023),
    (0.5, 0.5000625078134767, 1.5, -10000.0, 0.052969955894736729423),
    (0.5, 0.5000625078134767, 1.5, -100000000.0, 0.00098981656512650822678),
    (0.5, 0.5000625078134767, 1.5, -1000000000000.0, 0.000014496712464783755516),
];
