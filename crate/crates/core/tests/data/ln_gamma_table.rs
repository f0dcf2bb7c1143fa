// (x, ln Γ(x)) reference values at 40 significant digits
#![allow(clippy::excessive_precision, clippy::approx_constant)]
pub const LN_GAMMA_REFERENCE: &[(f64, f64)] = &[
    (0.001, 6.9071788853838536617),
    (0.0012589254117941675, 6.6767714009377104195),
    (0.001584893192461114, 6.4463254995557717421),
    (0.001995262314968879, 6.2158313255418941981),
    (0.0025118864315095794, 5.9852765246642634014),
    (0.0031622776601683794, 5.7546456283094314419),
    (0.003981071705534973, 5.5239192962444070692),
    (0.005011872336272725, 5.2930733918278767657),
    (0.006309573444801929, 5.0620778627371672288),
    (0.007943282347242814, 4.8308954026996260466),
    (0.01, 4.5994798780420217016),
    (0.012589254117941675, 4.3677745215014372505),
    (0.01584893192461114, 4.1357099316981194963),
    (0.0199526231496888, 3.9032019809553012935),
    (0.025118864315095808, 3.6701498436872585571),
    (0.03162277660168379, 3.4364345378978409298),
    (0.039810717055349734, 3.2019186611069264506),
    (0.05011872336272725, 2.9664484533573967052),
    (0.06309573444801933, 2.7298600090216393373),
    (0.07943282347242818, 2.4919924860142823055),
    (0.1, 2.252712651734205902),
    (0.12589254117941676, 2.0119572065752445311),
    (0.1584893192461114, 1.7698021918542660659),
    (0.19952623149688808, 1.5265725553534520286),
    (0.25118864315095824, 1.2830097037553430238),
    (0.31622776601683794, 1.0405206474866431429),
    (0.3981071705534973, 0.80153915144325227646),
    (0.5, 0.57236494292470008707),
    (0.5011872336272725, 0.57003727096901586282),
    (0.6309573444801936, 0.35223525245987342709),
    (0.75, 0.20328095143129537148),
    (0.7943282347242822, 0.15757010166283352747),
    (0.9, 0.066376239734742954426),
    (0.99, 0.0058548067647097814532),
    (0.999, 0.00057803853289138023817),
    (1.0, 0.0),
    (1.001, -0.00057639359828330615152),
    (1.01, -0.0056903079460696505037),
    (1.1, -0.049872441259839761785),
    (1.25, -0.098271836421813161464),
    (1.2589254117941675, -0.10025441808051518044),
    (1.4616321449683622, -0.1214862905358496081),
    (1.5, -0.12078223763524522235),
    (1.584893192461114, -0.11439757981615573748),
    (1.75, -0.084401121020485555958),
    (1.9, -0.038984275923083361674),
    (1.99, -0.0041955290887916687019),
    (1.9952623149688808, -0.0019957738579088343385),
    (2.01, 0.0042600229070983458338),
    (2.1, 0.045437738544485179002),
    (2.25, 0.1248717148923965943),
    (2.5, 0.28468287047291915963),
    (2.5118864315095824, 0.29307546844493559193),
    (3.0, 0.69314718055994530942),
    (3.1622776601683795, 0.84798811617622926733),
    (3.981071705534973, 1.7680342389160107995),
    (5.011872336272725, 3.1959505501812538586),
    (6.309573444801936, 5.3241913195849473882),
    (7.5, 7.5343642367587329552),
    (7.943282347242821, 8.4110535916067404208),
    (10.0, 12.801827480081469611),
    (12.25, 18.115669505710892619),
    (12.589254117941687, 18.956492376658597802),
    (15.848931924611142, 27.485930101097296219),
    (19.952623149688787, 39.199207703680669234),
    (25.11886431509582, 55.165233572412607636),
    (31.622776601683793, 76.793059258519862528),
    (39.81071705534978, 105.93634841101928669),
    (50.118723362727245, 145.0291435393100256),
    (63.09573444801943, 197.26213386349678515),
    (79.43282347242821, 266.81129524327724498),
    (100.0, 359.13420536957539878),
    (125.89254117941688, 481.35375108656276846),
    (158.48931924611142, 642.75461805060421627),
    (171.5, 709.14316303092824227),
    (199.52623149688827, 855.42524233888401106),
    (251.18864315095823, 1135.0872656235675417),
    (316.2277660168379, 1502.1665547261247526),
    (398.1071705534977, 1983.1752711419975325),
    (501.18723362727246, 2612.4942642647484321),
    (630.9573444801943, 3434.6704389998131587),
    (794.3282347242822, 4507.3762817737089094),
    (999.0, 5898.3136684305326583),
    (1000.0, 5905.2204232091812118),
];
