#pragma once

// Reference values from tests/oracles/gen_oracles.py (mpmath, 30 digits).

struct MlfCase {
  double alpha, beta, z, value;
};

struct DuhamelCase {
  double alpha, lambda_j, lambda_k, b;
  bool compensated;
  double value;
};

inline constexpr MlfCase kMlfTable[] = {
    {0.3, 0.3, 2.0, 400586.43366882275},
    {0.3, 0.3, -0.5, 0.14375650014722127},
    {0.3, 0.3, -1.5, 0.04761860082698702},
    {0.3, 0.3, -3.0, 0.017243316421744134},
    {0.3, 0.3, -10.0, 0.002051786303227615},
    {0.3, 0.3, -20.0, 0.000544624898044652},
    {0.3, 0.3, -24.9, 0.00035550489352714315},
    {0.3, 0.3, -30.0, 0.0002469007895996523},
    {0.3, 0.3, -60.0, 6.295386492374464e-05},
    {0.3, 0.3, -200.0, 5.744121828132013e-06},
    {0.3, 0.3, -1000.0, 2.3084455544850575e-07},
    {0.3, 0.5, 2.0, 252353.54226878818},
    {0.3, 0.5, -0.5, 0.30363310176042707},
    {0.3, 0.5, -1.5, 0.14317908964771223},
    {0.3, 0.5, -3.0, 0.07569461643574946},
    {0.3, 0.5, -10.0, 0.02247280492110131},
    {0.3, 0.5, -20.0, 0.011093071721269413},
    {0.3, 0.5, -24.9, 0.008882125968827313},
    {0.3, 0.5, -30.0, 0.0073551451503853045},
    {0.3, 0.5, -60.0, 0.003655183111062346},
    {0.3, 0.5, -200.0, 0.0010914304388516649},
    {0.3, 0.5, -1000.0, 0.0002179181937157602},
    {0.3, 1.0, 2.0, 79485.90762518356},
    {0.3, 1.0, -0.5, 0.6326490059435991},
    {0.3, 1.0, -1.5, 0.35538165657360316},
    {0.3, 1.0, -3.0, 0.21180263319643577},
    {0.3, 1.0, -10.0, 0.07264972907277209},
    {0.3, 1.0, -20.0, 0.03740622621388445},
    {0.3, 1.0, -24.9, 0.030219186424298414},
    {0.3, 1.0, -30.0, 0.025182617502927662},
    {0.3, 1.0, -60.0, 0.01271499032058585},
    {0.3, 1.0, -200.0, 0.003840658560053858},
    {0.3, 1.0, -1000.0, 0.0007699324649525777},
    {0.3, 2.5, 2.0, 2482.9800858852486},
    {0.3, 2.5, -0.5, 0.5369421366489947},
    {0.3, 2.5, -1.5, 0.33935429467388345},
    {0.3, 2.5, -3.0, 0.21794477869071718},
    {0.3, 2.5, -10.0, 0.08137985128397633},
    {0.3, 2.5, -20.0, 0.042914032539029576},
    {0.3, 2.5, -24.9, 0.03484264780943629},
    {0.3, 2.5, -30.0, 0.02913828920114321},
    {0.3, 2.5, -60.0, 0.014843004137062875},
    {0.3, 2.5, -200.0, 0.004512163771298399},
    {0.3, 2.5, -1000.0, 0.0009065650481426434},
    {0.5, 0.5, 2.0, 218.4459983635037},
    {0.5, 0.5, 5.0, 720048993373.8694},
    {0.5, 0.5, -0.5, 0.25634441145129333},
    {0.5, 0.5, -1.5, 0.08181145886628004},
    {0.5, 0.5, -3.0, 0.027186130003586436},
    {0.5, 0.5, -10.0, 0.0027796561095304283},
    {0.5, 0.5, -20.0, 0.0007026087267299006},
    {0.5, 0.5, -24.9, 0.0004538879241236126},
    {0.5, 0.5, -30.0, 0.00031291770525374203},
    {0.5, 0.5, -60.0, 7.832703717297162e-05},
    {0.5, 0.5, -200.0, 7.0521053470072114e-06},
    {0.5, 0.5, -1000.0, 2.8209436863274835e-07},
    {0.5, 1.0, 2.0, 108.94090438997797},
    {0.5, 1.0, 5.0, 144009798674.66104},
    {0.5, 1.0, -0.5, 0.6156903441929259},
    {0.5, 1.0, -1.5, 0.3215854164543175},
    {0.5, 1.0, -3.0, 0.17900115118138996},
    {0.5, 1.0, -10.0, 0.05614099274382259},
    {0.5, 1.0, -20.0, 0.02817434874105132},
    {0.5, 1.0, -24.9, 0.022639987776049506},
    {0.5, 1.0, -30.0, 0.01879588886141675},
    {0.5, 1.0, -60.0, 0.009401854275176388},
    {0.5, 1.0, -200.0, 0.0028209126572120466},
    {0.5, 1.0, -1000.0, 0.0005641893014533876},
    {0.5, 2.5, 2.0, 12.71051825697337},
    {0.5, 2.5, 5.0, 1152078389.144153},
    {0.5, 2.5, -0.5, 0.5609605780745427},
    {0.5, 2.5, -1.5, 0.36617654308219666},
    {0.5, 2.5, -3.0, 0.23836523509378046},
    {0.5, 2.5, -10.0, 0.08966006733630105},
    {0.5, 2.5, -20.0, 0.04730053028866859},
    {0.5, 2.5, -24.9, 0.03840401322400913},
    {0.5, 2.5, -30.0, 0.03211591959623234},
    {0.5, 2.5, -60.0, 0.01635781411166664},
    {0.5, 2.5, -200.0, 0.00497191516820853},
    {0.5, 2.5, -1000.0, 0.0009988726202687151},
    {0.75, 0.75, 2.0, 20.89848427765894},
    {0.75, 0.75, 5.0, 11778.623429457295},
    {0.75, 0.75, -0.5, 0.42184231246858206},
    {0.75, 0.75, -1.5, 0.13595987218428515},
    {0.75, 0.75, -3.0, 0.03791818756310711},
    {0.75, 0.75, -10.0, 0.00254344315296682},
    {0.75, 0.75, -20.0, 0.0005735604129539504},
    {0.75, 0.75, -24.9, 0.00036252517285315365},
    {0.75, 0.75, -30.0, 0.00024622074958261615},
    {0.75, 0.75, -60.0, 5.9464775307090635e-05},
    {0.75, 0.75, -200.0, 5.224795007131186e-06},
    {0.75, 0.75, -1000.0, 2.072854630909782e-07},
    {0.75, 0.5, 2.0, 26.38869742946251},
    {0.75, 0.5, 5.0, 20141.19209926582},
    {0.75, 0.5, -0.5, 0.20043772471309276},
    {0.75, 0.5, -1.5, -0.010230410364848338},
    {0.75, 0.5, -3.0, -0.04471085107777257},
    {0.75, 0.5, -10.0, -0.019917635219723926},
    {0.75, 0.5, -20.0, -0.01014818428940382},
    {0.75, 0.5, -24.9, -0.008166870642106118},
    {0.75, 0.5, -30.0, -0.006785618348191704},
    {0.75, 0.5, -60.0, -0.003398443933788527},
    {0.75, 0.5, -200.0, -0.0010200152558799012},
    {0.75, 0.5, -1000.0, -0.00020401187170678803},
    {0.75, 1.0, 2.0, 16.477360564726634},
    {0.75, 1.0, 5.0, 6888.131679740148},
    {0.75, 1.0, -0.5, 0.6037903450952468},
    {0.75, 1.0, -1.5, 0.2738222798391781},
    {0.75, 1.0, -3.0, 0.12585513691184153},
    {0.75, 1.0, -10.0, 0.030643250976059636},
    {0.75, 1.0, -20.0, 0.014527522154459504},
    {0.75, 1.0, -24.9, 0.01154831607925738},
    {0.75, 1.0, -30.0, 0.009516692693117128},
    {0.75, 1.0, -60.0, 0.0046764666421501245},
    {0.75, 1.0, -200.0, 0.0013861625576876},
    {0.75, 1.0, -1000.0, 0.00027609801263627745},
    {0.75, 2.5, 2.0, 3.32530751511615},
    {0.75, 2.5, 5.0, 275.2676541391797},
    {0.75, 2.5, -0.5, 0.5912918846430216},
    {0.75, 2.5, -1.5, 0.40263118134920184},
    {0.75, 2.5, -3.0, 0.26556121036721037},
    {0.75, 2.5, -10.0, 0.09911295772286233},
    {0.75, 2.5, -20.0, 0.05193958141193701},
    {0.75, 2.5, -24.9, 0.04210314848815598},
    {0.75, 2.5, -30.0, 0.035168304729581816},
    {0.75, 2.5, -60.0, 0.01785794210958422},
    {0.75, 2.5, -200.0, 0.005415360914719029},
    {0.75, 2.5, -1000.0, 0.0010870655282290299},
    {0.9, 0.9, 2.0, 10.415849710921112},
    {0.9, 0.9, 5.0, 524.9259209272324},
    {0.9, 0.9, -0.5, 0.5319023515684373},
    {0.9, 0.9, -1.5, 0.18239955004099984},
    {0.9, 0.9, -3.0, 0.044151271783037724},
    {0.9, 0.9, -10.0, 0.0014346523622941285},
    {0.9, 0.9, -20.0, 0.0002840259574119264},
    {0.9, 0.9, -24.9, 0.00017620148845036538},
    {0.9, 0.9, -30.0, 0.00011825044794307207},
    {0.9, 0.9, -60.0, 2.7819057608177362e-05},
    {0.9, 0.9, -200.0, 2.404950929682603e-06},
    {0.9, 0.9, -1000.0, 9.491707646933916e-08},
    {0.9, 0.5, 2.0, 14.252371471374127},
    {0.9, 0.5, 5.0, 1073.4144961144846},
    {0.9, 0.5, -0.5, 0.1713802754676761},
    {0.9, 0.5, -1.5, -0.07804748128249622},
    {0.9, 0.5, -3.0, -0.10025244677360001},
    {0.9, 0.5, -10.0, -0.030347874573228822},
    {0.9, 0.5, -20.0, -0.01424182912702877},
    {0.9, 0.5, -24.9, -0.011302871770187153},
    {0.9, 0.5, -30.0, -0.009304837283924557},
    {0.9, 0.5, -60.0, -0.0045623090729313065},
    {0.9, 0.5, -200.0, -0.0013505782894263857},
    {0.9, 0.5, -1000.0, -0.00026890289260738455},
    {0.9, 1.0, 2.0, 9.604927784571501},
    {0.9, 1.0, 5.0, 438.95181466448264},
    {0.9, 1.0, -0.5, 0.603405498695861},
    {0.9, 1.0, -1.5, 0.24309267847921726},
    {0.9, 1.0, -3.0, 0.08388835403377326},
    {0.9, 1.0, -10.0, 0.0128206060511021},
    {0.9, 1.0, -20.0, 0.005749507816109113},
    {0.9, 1.0, -24.9, 0.004531640662133409},
    {0.9, 1.0, -30.0, 0.003713707698459852},
    {0.9, 1.0, -60.0, 0.0018022340312846147},
    {0.9, 1.0, -200.0, 0.0005299754388832091},
    {0.9, 1.0, -1000.0, 0.00010528835943209589},
    {0.9, 2.5, 2.0, 2.299385423383296},
    {0.9, 2.5, 5.0, 29.771557600198964},
    {0.9, 2.5, -0.5, 0.6093289052298366},
    {0.9, 2.5, -1.5, 0.4268084284574463},
    {0.9, 2.5, -3.0, 0.28368888059467345},
    {0.9, 2.5, -10.0, 0.10403283007987224},
    {0.9, 2.5, -20.0, 0.0540106847371589},
    {0.9, 2.5, -24.9, 0.04369285957197499},
    {0.9, 2.5, -30.0, 0.03644336181208318},
    {0.9, 2.5, -60.0, 0.01843811733018298},
    {0.9, 2.5, -200.0, 0.005576593653002092},
    {0.9, 2.5, -1000.0, 0.0011184043989959167},
    {1.0, 1.0, 2.0, 7.38905609893065},
    {1.0, 1.0, 5.0, 148.4131591025766},
    {1.0, 1.0, -0.5, 0.6065306597126334},
    {1.0, 1.0, -1.5, 0.22313016014842982},
    {1.0, 1.0, -3.0, 0.049787068367863944},
    {1.0, 1.0, -10.0, 4.5399929762484854e-05},
    {1.0, 1.0, -20.0, 2.061153622438558e-09},
    {1.0, 1.0, -24.9, 1.5348551671425367e-11},
    {1.0, 1.0, -30.0, 9.357622968840175e-14},
    {1.0, 1.0, -60.0, 8.75651076269652e-27},
    {1.0, 1.0, -200.0, 1.3838965267367376e-87},
    {1.0, 1.0, -1000.0, 0.0},
    {1.0, 0.5, 2.0, 10.538428671807383},
    {1.0, 0.5, 5.0, 331.9066047052143},
    {1.0, 0.5, -0.5, 0.15527712659616935},
    {1.0, 0.5, -1.5, -0.12921287534824336},
    {1.0, 0.5, -3.0, -0.1474054417765825},
    {1.0, 0.5, -10.0, -0.03427543110755518},
    {1.0, 0.5, -20.0, -0.015325407164895395},
    {1.0, 0.5, -24.9, -0.01209201117552439},
    {1.0, 0.5, -30.0, -0.009917916820618688},
    {1.0, 0.5, -60.0, -0.004824326159202732},
    {1.0, 0.5, -200.0, -0.001421187113099899},
    {1.0, 0.5, -1000.0, -0.0002825189955362557},
    {1.0, 2.5, 2.0, 1.9293701885171504},
    {1.0, 2.5, 5.0, 13.02802077144756},
    {1.0, 2.5, -0.5, 0.6211085063846774},
    {1.0, 2.5, -1.5, 0.4440739074432308},
    {1.0, 2.5, -3.0, 0.297060275106911},
    {1.0, 2.5, -10.0, 0.10685326656299814},
    {1.0, 2.5, -20.0, 0.054970170877994},
    {1.0, 2.5, -24.9, 0.04438696096184736},
    {1.0, 2.5, -30.0, 0.036974741680552224},
    {1.0, 2.5, -60.0, 0.01864826003222883},
    {1.0, 2.5, -200.0, 0.0056277555662110415},
    {1.0, 2.5, -1000.0, 0.0011278146949929692},
};
inline constexpr MlfCase kMlfNearPoleTable[] = {
    {0.6, 0.6, -26.0, 0.0004111067648111943},
    {0.6, 0.6, -30.0, 0.00030776027117107536},
    {0.6, 0.6, -49.348, 0.00011273520031513618},
    {0.6, 0.6, -60.0, 7.606637908908628e-05},
    {0.6, 0.6, -200.0, 6.787932236095059e-06},
    {0.7, 0.7, -26.0, 0.00036792210517465974},
    {0.7, 0.7, -30.0, 0.00027414282008645453},
    {0.7, 0.7, -49.348, 9.924830481210832e-05},
    {0.7, 0.7, -60.0, 6.675388694509116e-05},
    {0.7, 0.7, -200.0, 5.896910818080003e-06},
    {0.8, 0.8, -26.0, 0.00028449941883836965},
    {0.8, 0.8, -30.0, 0.00021082443010626104},
    {0.8, 0.8, -49.348, 7.531653318125321e-05},
    {0.8, 0.8, -60.0, 5.048069042482117e-05},
    {0.8, 0.8, -200.0, 4.411165186207764e-06},
};
inline constexpr double kMlfHalfHalfMinus2Pi2 = 0.0007212255610650693;
inline constexpr DuhamelCase kDuhamelTable[] = {
    {0.6, -19.739208802178716, -19.739208802178716, 1.0, false, 7.391941458803995e-05},
    {0.75, -19.739208802178716, -19.739208802178716, 1.0, false, 6.28949488294755e-05},
    {0.9, -19.739208802178716, -19.739208802178716, 1.0, false, 3.268976115964002e-05},
    {0.6, -9.869604401089358, -49.34802200544679, 1.0, false, 7.184615153063014e-05},
    {0.75, -9.869604401089358, -49.34802200544679, 1.0, false, 6.407282468711735e-05},
    {0.9, -9.869604401089358, -49.34802200544679, 1.0, false, 3.6516278925740246e-05},
    {0.4, -19.739208802178716, -19.739208802178716, 1.0, true, 2.870404737998298e-06},
    {0.4, -9.869604401089358, -49.34802200544679, 1.0, true, 1.806968249687804e-06},
    {0.75, -19.739208802178716, -19.739208802178716, 1.0, true, 2.2265152626881644e-05},
};
inline constexpr double kMlfHalfOneMinus1 = 0.427583576155807;
