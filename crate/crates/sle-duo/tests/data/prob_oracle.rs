// (kappa, t, S(t))
pub const S_TABLE: &[(f64, f64, f64)] = &[
    (1.0, -1000.0, 1.7159899680347279075e-22),
    (1.0, -30.0, 2.5985308350686044274e-10),
    (1.0, -3.0, 0.01416223999997780409),
    (1.0, -0.7, 5.8991973371707143416),
    (1.0, 0.4, 0.017292487809082248046),
    (1.0, 1.9, 2.0933647036429455382e-10),
    (1.0, 2.1, 3.0983217428241825936e-11),
    (1.0, 30.0, 6.0834774119794862956e-37),
    (1.0, 1000.0, 5.7888099281442031804e-72),
    (3.0, -1000.0, 3.6134729612489210194e-8),
    (3.0, -30.0, 0.00041505793826998700715),
    (3.0, -3.0, 0.16105738304764715812),
    (3.0, -0.7, 1.4089607030041099507),
    (3.0, 0.4, 0.31760351021090772082),
    (3.0, 1.9, 0.0013636108764586387802),
    (3.0, 2.1, 0.0007646955083868069543),
    (3.0, 30.0, 1.1657010061615803697e-11),
    (3.0, 1000.0, 2.5579378015293078851e-22),
    (5.0, -1000.0, 0.000019907947626053164468),
    (5.0, -30.0, 0.0054406387990809208899),
    (5.0, -3.0, 0.20709626875448080699),
    (5.0, -0.7, 0.96783903377262799956),
    (5.0, 0.4, 0.58730988575018959679),
    (5.0, 1.9, 0.0334974885536073027),
    (5.0, 2.1, 0.024541064160724715304),
    (5.0, 30.0, 1.4222354606946801565e-6),
    (5.0, 1000.0, 2.3273318101246423171e-12),
    (6.0, -1000.0, 0.000077488959158112559154),
    (6.0, -30.0, 0.0083483909595158685173),
    (6.0, -3.0, 0.1911236304690475916),
    (6.0, -0.7, 0.84915386399560978251),
    (6.0, 0.4, 0.69191755967150263287),
    (6.0, 1.9, 0.075968004051325236743),
    (6.0, 2.1, 0.0595150450849044261),
    (6.0, 30.0, 0.000027113150323653517946),
    (6.0, 1000.0, 7.3318811771257799584e-10),
    (7.5, -1000.0, 0.00012173953507958976317),
    (7.5, -30.0, 0.005648458582982302753),
    (7.5, -3.0, 0.12930404047572604228),
    (7.5, -0.7, 0.7111535990574910969),
    (7.5, 0.4, 0.82336321904627219001),
    (7.5, 1.9, 0.1752823499641843254),
    (7.5, 2.1, 0.14686781346431289738),
    (7.5, 30.0, 0.00052643702436844172574),
    (7.5, 1000.0, 2.3525162142626306849e-7),
    (16.0 / 3.0, -1000.0, 0.000034111723825216186336),
    (16.0 / 3.0, -30.0, 0.0065701952965496037339),
    (16.0 / 3.0, -3.0, 0.20428212608223167129),
    (16.0 / 3.0, -0.7, 0.92469947658830365829),
    (16.0 / 3.0, 0.4, 0.62401552808683856585),
    (16.0 / 3.0, 1.9, 0.045469821089622614489),
    (16.0 / 3.0, 2.1, 0.034159807848792099122),
    (16.0 / 3.0, 30.0, 4.2890477486607433078e-6),
    (16.0 / 3.0, 1000.0, 2.0093390561996447328e-11),
    (7.0, -1000.0, 0.00014223869549743430747),
    (7.0, -30.0, 0.0080604772932398377632),
    (7.0, -3.0, 0.15446369936810137586),
    (7.0, -0.7, 0.75363689456732880274),
    (7.0, 0.4, 0.78234049844851988463),
    (7.0, 1.9, 0.13770742344984628208),
    (7.0, 2.1, 0.11318657899403897228),
    (7.0, 30.0, 0.0002250098975969338404),
    (7.0, 1000.0, 4.5117441983750900106e-8),
];

// (kappa, t, A, B, Q(t))
pub const Q_TABLE: &[(f64, f64, f64, f64, f64)] = &[
    (1.0, -50.0, 0.7, -0.3, 1.6221846145178560304e-12),
    (1.0, -1.3, 0.7, -0.3, 0.5400294935427102866),
    (1.0, 0.6, 0.7, -0.3, 2.1124351054537272321),
    (1.0, 5.0, 0.7, -0.3, 0.00011525689698607199335),
    (3.0, -50.0, 0.7, -0.3, 0.00004521972799692189012),
    (3.0, -1.3, 0.7, -0.3, 0.34591045199977822881),
    (3.0, 0.6, 0.7, -0.3, 0.47174130283229297788),
    (3.0, 5.0, 0.7, -0.3, 0.012714605079637770553),
    (5.0, -50.0, 0.7, -0.3, 0.0012871436139665795883),
    (5.0, -1.3, 0.7, -0.3, 0.34534787596144466871),
    (5.0, 0.6, 0.7, -0.3, 0.38400308785245609062),
    (5.0, 5.0, 0.7, -0.3, 0.016176367790581078649),
    (6.0, -50.0, 0.7, -0.3, 0.002810900910390143072),
    (6.0, -1.3, 0.7, -0.3, 0.36119906013724452682),
    (6.0, 0.6, 0.7, -0.3, 0.37782754700603468057),
    (6.0, 5.0, 0.7, -0.3, 0.0068490076154678738266),
    (7.5, -50.0, 0.7, -0.3, 0.0055180124867666015615),
    (7.5, -1.3, 0.7, -0.3, 0.3933848141942687015),
    (7.5, 0.6, 0.7, -0.3, 0.38021839536891666864),
    (7.5, 5.0, 0.7, -0.3, -0.019454204015459357651),
    (16.0 / 3.0, -50.0, 0.7, -0.3, 0.0017363074453468403063),
    (16.0 / 3.0, -1.3, 0.7, -0.3, 0.34988660453050790314),
    (16.0 / 3.0, 0.6, 0.7, -0.3, 0.38077797264871299455),
    (16.0 / 3.0, 5.0, 0.7, -0.3, 0.01389419489962388567),
    (7.0, -50.0, 0.7, -0.3, 0.0046414056417956242894),
    (7.0, -1.3, 0.7, -0.3, 0.38196082371643979051),
    (7.0, 0.6, 0.7, -0.3, 0.37856607517491108508),
    (7.0, 5.0, 0.7, -0.3, -0.0092812724671225426039),
];

// (kappa, t, P_left(t))
pub const P_LEFT_TABLE: &[(f64, f64, f64)] = &[
    (1.0, -40.0, 0.99999999997467121384),
    (1.0, -3.0, 0.99881792797387680535),
    (1.0, -0.5, 0.34779299229529680496),
    (1.0, 0.0, 0.019124327895332262502),
    (1.0, 0.5, 0.000063531260443165798682),
    (1.0, 3.0, 5.5905426803520909995e-16),
    (1.0, 40.0, 2.5252258235920279778e-40),
    (3.0, -40.0, 0.99842772813283772568),
    (3.0, -3.0, 0.89138768047072345036),
    (3.0, -0.5, 0.34475697565306897221),
    (3.0, 0.0, 0.11346555401359006436),
    (3.0, 0.5, 0.019298538525091355589),
    (3.0, 3.0, 0.000015623759783639874429),
    (3.0, 40.0, 3.5279972910924680098e-12),
    (5.0, -40.0, 0.93525990671112804256),
    (5.0, -3.0, 0.69622247217721118909),
    (5.0, -0.5, 0.33262616626302871823),
    (5.0, 0.0, 0.17824431028505977012),
    (5.0, 0.5, 0.072439509470586217605),
    (5.0, 3.0, 0.0024506811116799371519),
    (5.0, 40.0, 1.9283583355555180304e-6),
    (6.0, -40.0, 0.83510394409765415402),
    (6.0, -3.0, 0.60238033161097885984),
    (6.0, -0.5, 0.32821059482268028927),
    (6.0, 0.0, 0.20418725373837152648),
    (6.0, 0.5, 0.10505872894027957605),
    (6.0, 3.0, 0.0091733002871799901504),
    (6.0, 40.0, 0.000055531367200105484345),
    (7.5, -40.0, 0.59192266339412538926),
    (7.5, -3.0, 0.48204528616852530663),
    (7.5, -0.5, 0.32432599169240915099),
    (7.5, 0.0, 0.23905111707472335687),
    (7.5, 0.5, 0.15785421124865964673),
    (7.5, 3.0, 0.035995314977538306966),
    (7.5, 40.0, 0.001678154994897619497),
    (16.0 / 3.0, -40.0, 0.90799745612267097033),
    (16.0 / 3.0, -3.0, 0.66403671435139239857),
    (16.0 / 3.0, -0.5, 0.33100104313626392285),
    (16.0 / 3.0, 0.0, 0.1872176811221738491),
    (16.0 / 3.0, 0.5, 0.083015998425334157643),
    (16.0 / 3.0, 3.0, 0.0040032801952401708037),
    (16.0 / 3.0, 40.0, 6.7696536206203663633e-6),
    (7.0, -40.0, 0.68280618021279826534),
    (7.0, -3.0, 0.51891356305130572128),
    (7.0, -0.5, 0.32524318496338685678),
    (7.0, 0.0, 0.22782063004060227911),
    (7.0, 0.5, 0.13984655321370796302),
    (7.0, 3.0, 0.024203004859885675714),
    (7.0, 40.0, 0.00062963457777607813801),
];

// (kappa, t, Schramm P_left(t))
pub const SCHRAMM_TABLE: &[(f64, f64, f64)] = &[
    (1.0, -40.0, 0.99999999999911358331),
    (1.0, -1.0, 0.98342724986811315913),
    (1.0, 0.5, 0.11372640902988156093),
    (1.0, 3.0, 0.000047922952859645858053),
    (3.0, -40.0, 0.99942780856398512365),
    (3.0, -1.0, 0.82648662103303780228),
    (3.0, 0.5, 0.29800448277723738342),
    (3.0, 3.0, 0.040246802627316598824),
    (5.0, -40.0, 0.95999379302949694783),
    (5.0, -1.0, 0.68035527292277364561),
    (5.0, 0.5, 0.3966871264983093413),
    (5.0, 3.0, 0.18561749096364722171),
    (6.0, -40.0, 0.87961036138012328161),
    (6.0, -1.0, 0.61627005134721116722),
    (6.0, 0.5, 0.43477504485055704655),
    (6.0, 3.0, 0.28261247757472147673),
    (7.5, -40.0, 0.62601887175916316554),
    (7.5, -1.0, 0.5278768604005849218),
    (7.5, 0.5, 0.4846957573075048549),
    (7.5, 3.0, 0.44366296995079322384),
    (16.0 / 3.0, -40.0, 0.93970419753949570929),
    (16.0 / 3.0, -1.0, 0.65844355033718084668),
    (16.0 / 3.0, 0.5, 0.40994042602316068894),
    (16.0 / 3.0, 3.0, 0.21670521310087845279),
    (7.0, -40.0, 0.73060326106671889597),
    (7.0, -1.0, 0.55647966395016322213),
    (7.0, 0.5, 0.46879887504926961091),
    (7.0, 3.0, 0.38845828846844704888),
];
