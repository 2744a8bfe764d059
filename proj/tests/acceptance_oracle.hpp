// Reference factor-of-safety table for the acceptance binary.
// Generated data; do not edit by hand.
#ifndef LIQ_TESTS_ACCEPTANCE_ORACLE_HPP
#define LIQ_TESTS_ACCEPTANCE_ORACLE_HPP

namespace acceptance_oracle {

inline constexpr int kProfiles = 10;
inline constexpr int kLoadings = 6;
inline constexpr int kDepths = 60;

inline constexpr double kPga[kLoadings] = {0.10, 0.10, 0.25, 0.25, 0.45, 0.45};
inline constexpr double kMw[kLoadings] = {6.0, 7.5, 6.0, 7.5, 6.0, 7.5};

inline constexpr bool kSusceptible[kProfiles][kDepths] = {
    {true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true},
    {true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true},
    {true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true},
    {true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true},
    {true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true},
    {true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true},
    {true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true},
    {true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true},
    {true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true},
    {true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true, true},
};

inline constexpr double kFs[kProfiles][kLoadings][kDepths] = {
    {
        {1.952204259, 1.969478924, 1.986733882, 2.003843432, 2.020680356, 2.037117292, 2.053028173, 2.068289728, 2.082782996, 2.096394858, 1.999841955, 1.921540506, 1.856934898, 1.803687353, 1.761215118, 1.729874856, 1.710089943, 1.702272524, 1.704799973, 1.716812011, 1.736649371, 1.762449027, 1.79230898, 1.824419774, 1.857159283, 1.889151639, 1.918481153, 1.943855877, 1.965694867, 1.983663384, 1.997637618, 1.989006349, 1.974314108, 1.957751701, 1.93960055, 1.920072699, 1.899712633, 1.878698067, 1.85732384, 1.835863065, 1.814561204, 1.793644253, 1.773302752, 1.753702898, 1.734984768, 1.717263614, 1.700631794, 1.68516044, 1.670901274, 1.657888399, 1.646140015, 1.635660036, 1.626439599, 1.618458457, 1.611686252, 1.606083685, 1.601604801, 1.598192904, 1.595789397, 1.59432908},
        {1.319486719, 1.330267705, 1.341003478, 1.351608963, 1.361998313, 1.37208584, 1.381786999, 1.391019405, 1.399703849, 1.407765328, 1.341876823, 1.288312133, 1.243992074, 1.207331164, 1.177922269, 1.155986815, 1.141789467, 1.135585927, 1.136274216, 1.143263353, 1.15543239, 1.171528567, 1.19027749, 1.210470651, 1.231028091, 1.25103696, 1.269230784, 1.28476034, 1.297909638, 1.308464526, 1.316350879, 1.30932515, 1.298312988, 1.286080169, 1.272815664, 1.258662243, 1.243979824, 1.228886913, 1.213578062, 1.198232808, 1.183011877, 1.168062594, 1.153508545, 1.139456913, 1.125997409, 1.113203201, 1.101132248, 1.089828468, 1.079322982, 1.069635344, 1.060774718, 1.052740972, 1.045525712, 1.039113223, 1.033481335, 1.028602213, 1.024443858, 1.020967525, 1.018133412, 1.015897673},
        {0.7808817034, 0.7877915695, 0.7946935529, 0.8015373727, 0.8082721425, 0.8148469169, 0.8212112694, 0.8273158911, 0.8331131984, 0.8385579432, 0.7999367819, 0.7686162026, 0.742773959, 0.7214749411, 0.7044860471, 0.6919499424, 0.6840359771, 0.6809090096, 0.681919989, 0.6867248043, 0.6946597485, 0.704979611, 0.7169235919, 0.7297679095, 0.7428637133, 0.7556606556, 0.7673924611, 0.7775423507, 0.7862779466, 0.7934653537, 0.7990550471, 0.7956025397, 0.7897256433, 0.7831006803, 0.7758402199, 0.7680290795, 0.7598850531, 0.7514792269, 0.7429295362, 0.7343452261, 0.7258244816, 0.7174577012, 0.7093211009, 0.7014811593, 0.6939939074, 0.6869054456, 0.6802527177, 0.674064176, 0.6683605096, 0.6631553597, 0.658456006, 0.6542640143, 0.6505758398, 0.6473833829, 0.6446745008, 0.6424334739, 0.6406419203, 0.6392771615, 0.6383157587, 0.6377316319},
        {0.5277946877, 0.5321070819, 0.5364013911, 0.5406435854, 0.5447993253, 0.548834336, 0.5527147997, 0.5564077618, 0.5598815395, 0.5631061313, 0.5367507292, 0.5153248532, 0.4975968294, 0.4829324654, 0.4711689075, 0.4623947258, 0.4567157868, 0.4542343706, 0.4545096866, 0.4573053412, 0.462172956, 0.4686114266, 0.4761109962, 0.4841882604, 0.4924112363, 0.5004147839, 0.5076923137, 0.5139041362, 0.5191638552, 0.5233858103, 0.5265403515, 0.5237300602, 0.5193251953, 0.5144320676, 0.5091262656, 0.5034648972, 0.4975919295, 0.4915547653, 0.4854312247, 0.4792931233, 0.4732047508, 0.4672250377, 0.461403418, 0.4557827653, 0.4503989638, 0.4452812802, 0.4404528993, 0.4359313871, 0.4317291926, 0.4278541378, 0.424309887, 0.4210963886, 0.4182102846, 0.415645289, 0.4133925338, 0.4114408851, 0.409777543, 0.4083870099, 0.4072533647, 0.4063590694},
        {0.4338231686, 0.4376619831, 0.4414964183, 0.4452985404, 0.4490400792, 0.4526927316, 0.456228483, 0.4596199395, 0.4628406658, 0.465865524, 0.4444093233, 0.4270090014, 0.4126521995, 0.4008194117, 0.3913811373, 0.3844166346, 0.3800199873, 0.3782827831, 0.3788444383, 0.3815137802, 0.3859220825, 0.3916553394, 0.3982908844, 0.4054266164, 0.412702063, 0.4198114753, 0.4263291451, 0.4319679726, 0.4368210815, 0.4408140854, 0.4439194706, 0.442001411, 0.4387364685, 0.4350559335, 0.4310223444, 0.4266828219, 0.4221583628, 0.4174884594, 0.4127386312, 0.40796957, 0.4032358231, 0.3985876118, 0.3940672783, 0.3897117552, 0.3855521708, 0.3816141365, 0.3779181765, 0.3744800978, 0.3713113942, 0.3684196443, 0.3658088922, 0.363480008, 0.3614310221, 0.3596574349, 0.3581525004, 0.3569074855, 0.3559121779, 0.3551539786, 0.354619866, 0.354295351},
        {0.2932192709, 0.2956150455, 0.2980007728, 0.3003575474, 0.3026662919, 0.3049079644, 0.3070637776, 0.3091154232, 0.3110452997, 0.3128367396, 0.2981948496, 0.2862915851, 0.276442683, 0.2682958141, 0.2617605042, 0.2568859588, 0.2537309927, 0.2523524281, 0.2525053814, 0.2540585229, 0.2567627533, 0.2603396815, 0.264506109, 0.268993478, 0.2735617979, 0.2780082133, 0.2820512854, 0.2855022979, 0.288424364, 0.2907698946, 0.2925224175, 0.2909611445, 0.2885139974, 0.2857955931, 0.2828479253, 0.2797027206, 0.2764399608, 0.2730859807, 0.2696840137, 0.2662739574, 0.2628915282, 0.2595694654, 0.2563352322, 0.2532126474, 0.2502216466, 0.247378489, 0.2446960552, 0.242184104, 0.2398495515, 0.2376967432, 0.235727715, 0.2339424381, 0.232339047, 0.2309140495, 0.2296625188, 0.2285782695, 0.2276541906, 0.2268816722, 0.2262518693, 0.2257550385},
    },
    {
        {2.368347131, 2.387854672, 2.406810172, 2.425070768, 2.442498102, 2.458959905, 2.474331569, 2.48849766, 2.501353352, 2.512805753, 2.522775102, 2.470706094, 2.371846391, 2.287843209, 2.215205097, 2.151413434, 2.094612614, 2.043443645, 1.997190117, 1.956406822, 1.923239478, 1.90055236, 1.890497715, 1.891853573, 1.904828917, 1.928257115, 1.959255613, 1.994892433, 2.032518118, 2.069944419, 2.078674588, 2.082002803, 2.083044946, 2.081565317, 2.077341924, 2.071013974, 2.062572342, 2.052341054, 2.04067032, 2.027912442, 2.014405299, 2.000461855, 1.986363945, 1.972359259, 1.958658457, 1.945445104, 1.932862876, 1.921028098, 1.910029573, 1.899931246, 1.890774844, 1.882582423, 1.875358765, 1.86909362, 1.863763777, 1.859334977, 1.855763673, 1.852998645, 1.85098248, 1.849654313},
        {1.600755951, 1.612856028, 1.624546115, 1.635730285, 1.646315948, 1.656214927, 1.665344508, 1.673628451, 1.680997934, 1.687392431, 1.692760486, 1.656504574, 1.588939986, 1.531409753, 1.481556334, 1.437679468, 1.398526803, 1.363181166, 1.331156542, 1.302814874, 1.279575039, 1.263328101, 1.255484909, 1.255211799, 1.262626165, 1.276933449, 1.296206395, 1.318492133, 1.342031716, 1.365377243, 1.369750498, 1.370542952, 1.36981461, 1.367415425, 1.363205089, 1.35760854, 1.350624476, 1.34246961, 1.333376915, 1.323579774, 1.313301193, 1.302746997, 1.29210186, 1.281527444, 1.27116064, 1.261120132, 1.251498209, 1.242369011, 1.233788522, 1.225796389, 1.218417712, 1.211664775, 1.205538655, 1.200030737, 1.195124096, 1.190794782, 1.187012986, 1.183744112, 1.180949762, 1.1785895},
        {0.9473388522, 0.9551418689, 0.9627240686, 0.9700283074, 0.9769992409, 0.983583962, 0.9897326276, 0.9953990641, 1.000541341, 1.005122301, 1.009110041, 0.9882824375, 0.9487385562, 0.9151372836, 0.8860820387, 0.8605653735, 0.8378450455, 0.8173774579, 0.7988760469, 0.7825627288, 0.7692957913, 0.760220944, 0.7561990861, 0.7567414291, 0.7619315667, 0.771302846, 0.7837022454, 0.7979569732, 0.8130072473, 0.8279777675, 0.8314698353, 0.8328011213, 0.8332179786, 0.8326261267, 0.8309367697, 0.8284055896, 0.8250289369, 0.8209364215, 0.8162681282, 0.8111649767, 0.8057621194, 0.800184742, 0.794545578, 0.7889437035, 0.7834633828, 0.7781780416, 0.7731451504, 0.7684112394, 0.7640118294, 0.7599724983, 0.7563099376, 0.7530329692, 0.7501435061, 0.747637448, 0.7455055107, 0.7437339908, 0.7423054694, 0.7411994578, 0.7403929922, 0.7398617254},
        {0.6403023806, 0.6451424111, 0.6498184461, 0.6542921139, 0.658526379, 0.6624859706, 0.6661378033, 0.6694513805, 0.6723991738, 0.6749569723, 0.6771041944, 0.6626018295, 0.6355759943, 0.6125639012, 0.5926225337, 0.5750717871, 0.559410721, 0.5452724666, 0.5324626166, 0.5211259496, 0.5118300156, 0.5053312402, 0.5021939635, 0.5020847195, 0.5050504662, 0.5107733797, 0.518482558, 0.5273968532, 0.5368126865, 0.5461508972, 0.547900199, 0.5482171808, 0.5479258438, 0.5469661701, 0.5452820357, 0.5430434161, 0.5402497903, 0.5369878441, 0.533350766, 0.5294319094, 0.525320477, 0.5210987987, 0.516840744, 0.5126109776, 0.508464256, 0.504448053, 0.5005992835, 0.4969476044, 0.493515409, 0.4903185554, 0.4873670849, 0.4846659099, 0.4822154621, 0.4800122947, 0.4780496385, 0.4763179129, 0.4748051943, 0.4734976447, 0.4723799047, 0.4714358002},
        {0.5262993624, 0.5306343716, 0.5348467048, 0.5389046152, 0.542777356, 0.5464355344, 0.5498514598, 0.55299948, 0.5558563005, 0.5584012784, 0.5606166893, 0.5490457986, 0.5270769757, 0.508409602, 0.4922677993, 0.4780918742, 0.4654694697, 0.4540985877, 0.4438200261, 0.4347570716, 0.4273865507, 0.4223449689, 0.4201106034, 0.4204119051, 0.4232953148, 0.4285015811, 0.4353901363, 0.4433094296, 0.451670693, 0.4599876486, 0.4619276863, 0.4626672896, 0.462898877, 0.4625700704, 0.4616315387, 0.4602253275, 0.4583494094, 0.4560757897, 0.4534822934, 0.4506472093, 0.4476456219, 0.4445470789, 0.44141421, 0.4383020575, 0.4352574349, 0.4323211342, 0.4295250836, 0.426895133, 0.4244510163, 0.4222069435, 0.4201721875, 0.4183516496, 0.4167463923, 0.4153541378, 0.4141697282, 0.4131855505, 0.4123919274, 0.4117774766, 0.4113294401, 0.4110342919},
        {0.3557235448, 0.3584124506, 0.3610102478, 0.3634956189, 0.3658479883, 0.3680477615, 0.3700765574, 0.3719174336, 0.3735550965, 0.3749760957, 0.3761689969, 0.3681121275, 0.3530977746, 0.3403132785, 0.3292347409, 0.3194843262, 0.3107837339, 0.3029291481, 0.2958125648, 0.2895144164, 0.2843500087, 0.2807395779, 0.2789966464, 0.2789359553, 0.2805835923, 0.2837629887, 0.2880458656, 0.2929982518, 0.2982292703, 0.3034171651, 0.3043889995, 0.3045651004, 0.3044032466, 0.3038700945, 0.3029344643, 0.3016907867, 0.3001387724, 0.2983265801, 0.2963059811, 0.2941288386, 0.2918447095, 0.2894993326, 0.2871337466, 0.2847838764, 0.2824801422, 0.2802489183, 0.2781107131, 0.2760820025, 0.2741752272, 0.2723991975, 0.2707594916, 0.2692588388, 0.2678974789, 0.2666734971, 0.2655831325, 0.2646210627, 0.2637806635, 0.2630542471, 0.2624332804, 0.2619087779},
    },
    {
        {2.854279793, 2.873588679, 2.891745948, 2.908617124, 2.924078575, 2.938019003, 2.950340824, 2.960961391, 2.969814065, 2.976849088, 2.98203425, 2.98535533, 2.986816311, 2.864622428, 2.759067335, 2.666532948, 2.584367014, 2.510589219, 2.443698729, 2.382544414, 2.326235953, 2.274119687, 2.226082653, 2.183380312, 2.148168954, 2.120441322, 2.10722324, 2.108594743, 2.122879546, 2.122462071, 2.121585, 2.125049469, 2.130738303, 2.136738793, 2.142614908, 2.147293153, 2.150390172, 2.151763185, 2.151438703, 2.149554275, 2.146313562, 2.141953233, 2.136719318, 2.130851105, 2.124570799, 2.118074808, 2.111541701, 2.105114011, 2.098910971, 2.093026768, 2.087532593, 2.082478999, 2.07789838, 2.073807458, 2.070209684, 2.067097517, 2.064454527, 2.062257311, 2.060477207, 2.059081789},
        {1.929195812, 1.94094091, 1.951867539, 1.9618863, 1.970915427, 1.97888177, 1.9857217, 1.991381911, 1.995820104, 1.999005539, 2.000919441, 2.001555252, 2.000918729, 1.917487487, 1.845298068, 1.78190747, 1.725525051, 1.674813958, 1.628761088, 1.586589387, 1.547697774, 1.511644386, 1.47834782, 1.448634698, 1.423925427, 1.404201976, 1.394098973, 1.39364185, 1.401695588, 1.400018949, 1.398026476, 1.398879756, 1.401177858, 1.403659814, 1.406038897, 1.407611711, 1.408129809, 1.407503241, 1.405753135, 1.402973078, 1.399299417, 1.394889452, 1.389905919, 1.384506478, 1.378837013, 1.373026037, 1.367189928, 1.361421217, 1.355796948, 1.35037763, 1.345208656, 1.340321899, 1.335737388, 1.331464976, 1.327505937, 1.323854479, 1.320499138, 1.317424034, 1.314609994, 1.31203553},
        {1.141711917, 1.149435471, 1.156698379, 1.16344685, 1.16963143, 1.175207601, 1.18013633, 1.184384556, 1.187925626, 1.190739635, 1.1928137, 1.194142132, 1.194726524, 1.145848971, 1.103626934, 1.066613179, 1.033746806, 1.004235688, 0.9774794917, 0.9530177657, 0.9304943813, 0.9096478749, 0.8904330612, 0.8733521248, 0.8592675814, 0.8481765288, 0.842889296, 0.8434378971, 0.8491518182, 0.8489848282, 0.8486339998, 0.8500197877, 0.8522953212, 0.8546955173, 0.8570459633, 0.8589172613, 0.8601560688, 0.860705274, 0.8605754813, 0.8598217101, 0.8585254247, 0.856781293, 0.8546877271, 0.8523404422, 0.8498283194, 0.8472299231, 0.8446166805, 0.8420456045, 0.8395643884, 0.8372107071, 0.8350130372, 0.8329915996, 0.8311593522, 0.8295229832, 0.8280838736, 0.8268390068, 0.8257818106, 0.8249029244, 0.824190883, 0.8236327156},
        {0.7716783249, 0.7763763642, 0.7807470155, 0.7847545199, 0.7883661706, 0.7915527078, 0.7942886799, 0.7965527644, 0.7983280418, 0.7996022158, 0.8003677763, 0.8006221008, 0.8003674918, 0.7669949948, 0.7381192273, 0.7127629881, 0.6902100203, 0.6699255834, 0.6515044354, 0.6346357548, 0.6190791098, 0.6046577543, 0.5913391282, 0.5794538792, 0.5695701708, 0.5616807904, 0.5576395894, 0.5574567398, 0.5606782354, 0.5600075797, 0.5592105903, 0.5595519023, 0.5604711433, 0.5614639257, 0.5624155586, 0.5630446844, 0.5632519237, 0.5630012963, 0.5623012541, 0.5611892313, 0.5597197669, 0.5579557809, 0.5559623676, 0.5538025912, 0.5515348052, 0.5492104149, 0.5468759713, 0.5445684869, 0.5423187791, 0.5401510521, 0.5380834623, 0.5361287594, 0.5342949553, 0.5325859903, 0.5310023746, 0.5295417917, 0.5281996553, 0.5269696135, 0.5258439976, 0.524814212},
        {0.6342843985, 0.6385752619, 0.6426102106, 0.6463593609, 0.6497952388, 0.6528931119, 0.6556312942, 0.6579914202, 0.6599586811, 0.6615220196, 0.6626742777, 0.6634122955, 0.6637369579, 0.6365827618, 0.6131260743, 0.5925628773, 0.5743037809, 0.5579087153, 0.5430441621, 0.5294543143, 0.5169413229, 0.5053599305, 0.494685034, 0.4851956249, 0.4773708786, 0.4712091826, 0.4682718311, 0.4685766095, 0.4717510101, 0.4716582379, 0.4714633332, 0.4722332154, 0.4734974007, 0.4748308429, 0.4761366463, 0.4771762563, 0.4778644827, 0.4781695967, 0.4780974896, 0.4776787279, 0.4769585693, 0.4759896072, 0.474826515, 0.4735224679, 0.4721268441, 0.4706832906, 0.4692314892, 0.4678031136, 0.4664246602, 0.4651170595, 0.4638961318, 0.4627731109, 0.4617551957, 0.4608461018, 0.4600465964, 0.4593550038, 0.4587676726, 0.4582794024, 0.4578838239, 0.4575737309},
        {0.4287101805, 0.4313202023, 0.4337483419, 0.4359747333, 0.4379812059, 0.4397515044, 0.4412714888, 0.4425293136, 0.4435155788, 0.4442234532, 0.4446487646, 0.444790056, 0.4446486065, 0.4261083304, 0.4100662374, 0.3959794378, 0.3834500113, 0.3721808797, 0.3619469085, 0.3525754194, 0.3439328388, 0.3359209746, 0.3285217379, 0.3219188218, 0.3164278727, 0.3120448836, 0.3097997719, 0.3096981888, 0.3114879085, 0.311115322, 0.3106725502, 0.3108621679, 0.3113728574, 0.3119244031, 0.3124530881, 0.3128026024, 0.3129177354, 0.312778498, 0.3123895856, 0.3117717952, 0.310955426, 0.3099754338, 0.308867982, 0.3076681062, 0.3064082251, 0.3051168972, 0.3038199841, 0.3025380483, 0.3012882106, 0.3000839178, 0.2989352569, 0.2978493108, 0.2968305307, 0.2958811057, 0.2950013192, 0.2941898843, 0.2934442529, 0.2927608964, 0.2921355542, 0.2915634511},
    },
    {
        {3.397474116, 3.414186786, 3.429156834, 3.442279709, 3.453468111, 3.462653202, 3.469785589, 3.474836031, 3.477795885, 3.478677236, 3.477512751, 3.47435523, 3.46927689, 3.462368391, 3.38762805, 3.259750569, 3.146754088, 3.045872219, 2.955011082, 2.872563923, 2.797283545, 2.728192483, 2.664518441, 2.605647026, 2.551086575, 2.50044158, 2.450157324, 2.37345755, 2.302407771, 2.23653061, 2.175409659, 2.118704188, 2.066169163, 2.017858516, 1.974280669, 1.936207528, 1.904260955, 1.878629857, 1.858999508, 1.844679962, 1.834785615, 1.828390435, 1.824631422, 1.822763073, 1.822176229, 1.822392678, 1.823060676, 1.823920517, 1.824796302, 1.825575599, 1.826194598, 1.826626049, 1.826869762, 1.826945302, 1.826886484, 1.826737259, 1.826548673, 1.826376607, 1.826280077, 1.826321528},
        {2.29633859, 2.306083281, 2.314608555, 2.321846126, 2.327739629, 2.332245397, 2.335333085, 2.336986101, 2.337201857, 2.335991802, 2.333381272, 2.329409129, 2.324127226, 2.317599695, 2.265687183, 2.17832444, 2.101018539, 2.031901225, 1.96955828, 1.912904291, 1.861096469, 1.813473967, 1.769514274, 1.728801286, 1.691001555, 1.655846343, 1.620977667, 1.568698671, 1.520234542, 1.475260867, 1.433494439, 1.394702778, 1.35871706, 1.325565352, 1.295573649, 1.269239082, 1.24695818, 1.228842295, 1.214672946, 1.203987429, 1.196197279, 1.190690111, 1.186897124, 1.184328307, 1.18258428, 1.181352324, 1.180403017, 1.179567509, 1.178731871, 1.177823662, 1.17680212, 1.17565022, 1.174368423, 1.172969879, 1.171476818, 1.16991786, 1.168326024, 1.166737256, 1.165189322, 1.163721978},
        {1.358989646, 1.365674714, 1.371662734, 1.376911884, 1.381387244, 1.385061281, 1.387914235, 1.389934413, 1.391118354, 1.391470894, 1.3910051, 1.389742092, 1.387710756, 1.384947357, 1.35505122, 1.303900228, 1.258701635, 1.218348888, 1.182004433, 1.149025569, 1.118913418, 1.091276993, 1.065807376, 1.04225881, 1.02043463, 1.000176632, 0.9800629297, 0.9493830199, 0.9209631082, 0.8946122439, 0.8701638637, 0.8474816753, 0.8264676652, 0.8071434064, 0.7897122678, 0.7744830111, 0.761704382, 0.7514519427, 0.7435998033, 0.7378719849, 0.7339142459, 0.7313561739, 0.7298525689, 0.7291052292, 0.7288704918, 0.728957071, 0.7292242705, 0.7295682066, 0.7299185209, 0.7302302397, 0.7304778393, 0.7306504197, 0.7307479046, 0.7307781208, 0.7307545935, 0.7306949036, 0.7306194693, 0.7305506427, 0.7305120308, 0.7305286111},
        {0.9185354361, 0.9224333126, 0.925843422, 0.9287384505, 0.9310958515, 0.9328981588, 0.9341332338, 0.9347944406, 0.9348807427, 0.9343967207, 0.9333525086, 0.9317636516, 0.9296508905, 0.927039878, 0.9062748732, 0.8713297759, 0.8404074156, 0.8127604898, 0.787823312, 0.7651617164, 0.7444385874, 0.7253895868, 0.7078057096, 0.6915205145, 0.676400622, 0.6623385372, 0.6483910666, 0.6274794682, 0.608093817, 0.5901043468, 0.5733977757, 0.557881111, 0.543486824, 0.5302261406, 0.5182294594, 0.5076956328, 0.498783272, 0.4915369182, 0.4858691782, 0.4815949716, 0.4784789114, 0.4762760444, 0.4747588498, 0.4737313229, 0.4730337122, 0.4725409296, 0.4721612069, 0.4718270035, 0.4714927486, 0.4711294646, 0.4707208479, 0.4702600882, 0.4697473692, 0.4691879515, 0.4685907271, 0.4679671438, 0.4673304096, 0.4666949025, 0.4660757289, 0.4654887914},
        {0.754994248, 0.7587081747, 0.7620348521, 0.7649510465, 0.767437358, 0.7694784894, 0.7710634641, 0.7721857848, 0.77284353, 0.7730393858, 0.7727806114, 0.7720789401, 0.7709504201, 0.7694151981, 0.7528062334, 0.7243890153, 0.6992786862, 0.6768604931, 0.6566691293, 0.6383475384, 0.6216185656, 0.6062649963, 0.592115209, 0.5790326724, 0.5669081279, 0.5556536845, 0.5444794054, 0.5274350111, 0.5116461712, 0.4970068022, 0.4834243687, 0.4708231529, 0.4591487029, 0.4484130036, 0.4387290376, 0.4302683395, 0.4231691011, 0.4174733015, 0.4131110018, 0.4099288805, 0.4077301366, 0.4063089855, 0.4054736494, 0.4050584607, 0.404928051, 0.4049761506, 0.4051245947, 0.4053156704, 0.4055102894, 0.4056834665, 0.4058210218, 0.4059168998, 0.4059710581, 0.4059878449, 0.4059747742, 0.4059416131, 0.4058997052, 0.4058614682, 0.4058400171, 0.4058492284},
        {0.5102974645, 0.5124629514, 0.5143574567, 0.5159658058, 0.517275473, 0.5182767549, 0.5189629077, 0.5193302448, 0.5193781904, 0.5191092893, 0.5185291714, 0.5176464731, 0.5164727169, 0.5150221544, 0.5034860407, 0.4840720977, 0.4668930086, 0.4515336055, 0.4376796178, 0.4250898425, 0.413576993, 0.4029942149, 0.3932253942, 0.3841780636, 0.3757781234, 0.367965854, 0.3602172592, 0.3485997046, 0.3378298983, 0.3278357482, 0.3185543198, 0.3099339506, 0.3019371244, 0.2945700781, 0.2879052552, 0.2820531294, 0.2771018178, 0.2730760657, 0.2699273212, 0.267552762, 0.2658216174, 0.2645978024, 0.2637549165, 0.2631840683, 0.2627965068, 0.2625227387, 0.2623117816, 0.2621261131, 0.2619404159, 0.2617385915, 0.2615115822, 0.2612556045, 0.2609707607, 0.260659973, 0.2603281817, 0.2599817466, 0.2596280053, 0.2592749458, 0.2589309605, 0.2586048841},
    },
    {
        {4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 3.806813434, 3.627979985, 3.477221117, 3.347851544, 3.235170694, 3.135788828, 3.047209982, 2.96756421, 2.89543021, 2.829714536, 2.769567367, 2.714322496, 2.663453758, 2.616542862, 2.573255272, 2.533321871, 2.496524856, 2.462686751, 2.416814686, 2.361368416, 2.309988564, 2.261432697, 2.210287525, 2.163021631, 2.119362144, 2.079061955, 2.041895511, 2.007654949, 1.976147499, 1.947197825, 1.920633829, 1.896317206, 1.87412941, 1.85397246, 1.83575732, 1.819390754, 1.804766431, 1.791762387, 1.780243749, 1.770065826, 1.761090798, 1.753176818, 1.746193831, 1.740023317, 1.734559933, 1.729712317, 1.725403376, 1.721570332, 1.718164743, 1.71515261},
        {2.704836535, 2.711038067, 2.71562002, 2.718551163, 2.719817256, 2.719421286, 2.71738342, 2.713740662, 2.708546231, 2.701868693, 2.554339209, 2.432408069, 2.329449198, 2.240945746, 2.163721833, 2.095487154, 2.034555127, 1.979661955, 1.929846754, 1.88436993, 1.842656264, 1.804254361, 1.768807215, 1.736030484, 1.705696196, 1.677620381, 1.651653547, 1.627673279, 1.595775178, 1.557606411, 1.522175719, 1.488658247, 1.453489589, 1.420925454, 1.390779836, 1.362884221, 1.337084765, 1.313239704, 1.291217611, 1.270898883, 1.252166434, 1.234925594, 1.219094871, 1.204606401, 1.191398348, 1.17940635, 1.168557782, 1.158770175, 1.149953035, 1.142009903, 1.134849148, 1.12837694, 1.122507438, 1.117162586, 1.112273131, 1.107779086, 1.103629865, 1.09978426, 1.096210399, 1.092885759},
        {1.60074166, 1.60549108, 1.609306581, 1.612167732, 1.614064055, 1.614995204, 1.614970968, 1.61401111, 1.612145037, 1.609411319, 1.522725374, 1.451191994, 1.390888447, 1.339140618, 1.294068277, 1.254315531, 1.218883993, 1.187025684, 1.158172084, 1.131885814, 1.107826947, 1.085728999, 1.065381503, 1.046617145, 1.029302109, 1.013328749, 0.9986099426, 0.9850747005, 0.9667258746, 0.9445473665, 0.9239954256, 0.9045730787, 0.88411501, 0.8652086522, 0.8477448577, 0.831624782, 0.8167582045, 0.8030619797, 0.7904589997, 0.7788791301, 0.7682535317, 0.7585268824, 0.7496517642, 0.7415889838, 0.7343029279, 0.7277563016, 0.7219065722, 0.716704955, 0.7120974997, 0.7080263304, 0.7044363194, 0.7012707272, 0.6984775325, 0.6960093267, 0.6938239731, 0.6918849268, 0.6901613502, 0.6886281327, 0.6872658972, 0.6860610441},
        {1.081934614, 1.084415227, 1.086248008, 1.087420465, 1.087926902, 1.087768514, 1.086953368, 1.085496265, 1.083418492, 1.080747477, 1.021735684, 0.9729632276, 0.9317796791, 0.8963782983, 0.8654887333, 0.8381948616, 0.8138220508, 0.7918647821, 0.7719387015, 0.753747972, 0.7370625057, 0.7217017443, 0.7075228861, 0.6944121934, 0.6822784783, 0.6710481523, 0.660661419, 0.6510693116, 0.6383100711, 0.6230425645, 0.6088702874, 0.5954632989, 0.5813958356, 0.5683701816, 0.5563119345, 0.5451536882, 0.5348339058, 0.5252958815, 0.5164870444, 0.5083595531, 0.5008665734, 0.4939702377, 0.4876379483, 0.4818425602, 0.4765593391, 0.4717625399, 0.4674231127, 0.4635080699, 0.459981214, 0.456803961, 0.4539396594, 0.4513507761, 0.4490029752, 0.4468650346, 0.4449092526, 0.4431116345, 0.441451946, 0.4399137041, 0.4384841598, 0.4371543036},
        {0.8893009221, 0.8919394889, 0.8940592116, 0.8956487399, 0.8967022528, 0.8972195576, 0.8972060933, 0.8966728391, 0.8956361319, 0.8941173995, 0.8459585409, 0.8062177745, 0.7727158038, 0.7439670098, 0.7189268208, 0.6968419619, 0.6771577737, 0.6594587134, 0.6434289355, 0.6288254524, 0.615459415, 0.603182777, 0.591878613, 0.5814539694, 0.5718345049, 0.5629604159, 0.5547833014, 0.5472637225, 0.5370699303, 0.5247485369, 0.513330792, 0.5025405993, 0.4911750056, 0.4806714735, 0.4709693654, 0.4620137678, 0.4537545581, 0.4461455443, 0.4391438887, 0.4327106278, 0.4268075176, 0.4214038236, 0.4164732023, 0.4119938799, 0.407946071, 0.4043090565, 0.4010592068, 0.3981694194, 0.395609722, 0.3933479613, 0.3913535108, 0.3895948484, 0.3880430736, 0.3866718482, 0.3854577628, 0.3843805149, 0.3834229723, 0.3825711848, 0.3818143874, 0.3811450245},
        {0.6010747856, 0.6024529038, 0.6034711155, 0.6041224807, 0.6044038346, 0.6043158413, 0.6038629823, 0.6030534804, 0.6018991625, 0.6004152652, 0.5676309354, 0.5405351264, 0.5176553773, 0.4979879435, 0.4808270741, 0.465663812, 0.4521233616, 0.439924879, 0.4288548342, 0.4187488733, 0.4094791698, 0.4009454135, 0.3930682701, 0.3857845519, 0.379043599, 0.3728045291, 0.3670341217, 0.3617051731, 0.3546167061, 0.346134758, 0.3382612708, 0.3308129438, 0.3229976864, 0.315761212, 0.3090621858, 0.3028631601, 0.2971299477, 0.2918310453, 0.2869372469, 0.2824219739, 0.2782592075, 0.2744279098, 0.2709099713, 0.2676903112, 0.2647551884, 0.2620902999, 0.2596795071, 0.2575044833, 0.2555451189, 0.2537799784, 0.2521886997, 0.2507504312, 0.2494460973, 0.2482583526, 0.247171807, 0.2461731303, 0.2452510811, 0.2443965023, 0.243602311, 0.242863502},
    },
    {
        {4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 3.942264632, 3.805892888, 3.685355059, 3.577959667, 3.481654204, 3.394850641, 3.316304504, 3.245029275, 3.180234644, 3.121281209, 3.067646731, 2.983228597, 2.90232818, 2.828083179, 2.759861285, 2.697119228, 2.639386208, 2.586250625, 2.536975596, 2.484296605, 2.435843638, 2.391282672, 2.350311052, 2.312652133, 2.278051289, 2.246276908, 2.217099639, 2.190318867, 2.16574049, 2.143180912, 2.122465826, 2.103429232, 2.085912657, 2.069764541, 2.05483979, 2.040996612, 2.028108232, 2.016043958, 2.004682476, 1.993908401, 1.983612473, 1.973691872, 1.964050678, 1.954600527, 1.945261524, 1.935963514},
        {3.176869591, 3.177496697, 3.176073814, 3.17263658, 3.167243024, 3.159972409, 3.150923682, 3.140213602, 3.127974627, 3.114352624, 3.099504492, 3.00990496, 2.86600655, 2.743110631, 2.636634931, 2.543283395, 2.460630569, 2.386856738, 2.320573655, 2.260706649, 2.206412936, 2.157023798, 2.112002871, 2.07091556, 2.033406253, 1.975558318, 1.920125338, 1.869176183, 1.822282096, 1.779074444, 1.739233544, 1.702479728, 1.668320332, 1.631976413, 1.598463115, 1.567553777, 1.539043052, 1.512743314, 1.488481981, 1.466102096, 1.44544874, 1.426386271, 1.408783784, 1.392517688, 1.377470895, 1.363532153, 1.350595526, 1.338559976, 1.327329055, 1.316808848, 1.306915522, 1.29756308, 1.288671939, 1.280166676, 1.271976145, 1.264033653, 1.256277237, 1.248650058, 1.24110096, 1.233585246},
        {1.880094207, 1.881730347, 1.882176613, 1.881451557, 1.879586986, 1.876627322, 1.872628732, 1.867658069, 1.861791656, 1.855113973, 1.847716277, 1.795730756, 1.711260929, 1.639223471, 1.576905853, 1.522357155, 1.474142024, 1.431183867, 1.392661682, 1.357940256, 1.326521802, 1.29801171, 1.272093858, 1.248512484, 1.227058693, 1.193291439, 1.160931272, 1.131233272, 1.103944514, 1.078847691, 1.055754483, 1.03450025, 1.014790239, 0.9937186421, 0.9743374552, 0.9565130689, 0.9401244208, 0.9250608532, 0.9112205157, 0.8985107631, 0.8868398556, 0.8761275468, 0.8662961959, 0.8572723647, 0.8489863303, 0.8413716929, 0.8343650627, 0.8279058165, 0.8219359161, 0.8163986447, 0.8112432926, 0.8064175831, 0.8018729903, 0.7975633603, 0.7934449892, 0.7894767488, 0.7856202713, 0.7818402107, 0.7781046095, 0.7743854057},
        {1.270747836, 1.270998679, 1.270429526, 1.269054632, 1.26689721, 1.263988964, 1.260369473, 1.256085441, 1.251189851, 1.24574105, 1.239801797, 1.203961984, 1.14640262, 1.097244252, 1.054653972, 1.017313358, 0.9842522274, 0.9547426952, 0.9282294618, 0.9042826594, 0.8825651745, 0.8628095192, 0.8448011485, 0.8283662239, 0.8133625011, 0.7902233271, 0.7680501354, 0.7476704733, 0.7289128383, 0.7116297775, 0.6956934177, 0.6809918912, 0.6673281326, 0.6527905652, 0.6393852461, 0.627021511, 0.6156172208, 0.6050973257, 0.5953927922, 0.5864408383, 0.5781794959, 0.5705545085, 0.5635135136, 0.5570070753, 0.5509883579, 0.5454128614, 0.5402382105, 0.5354239906, 0.530931622, 0.5267235393, 0.5227662087, 0.5190252322, 0.5154687755, 0.5120666705, 0.508790458, 0.5056134612, 0.5025108947, 0.4994600231, 0.4964403839, 0.4934340984},
        {1.044496782, 1.045405748, 1.045653674, 1.045250865, 1.044214992, 1.042570734, 1.040349296, 1.037587816, 1.034328698, 1.030618874, 1.026509043, 0.9976281979, 0.9507005162, 0.9106797063, 0.8760588072, 0.8457539751, 0.8189677908, 0.7951021482, 0.7737009343, 0.7544112535, 0.7369565564, 0.7211176167, 0.7067188098, 0.6936180464, 0.6816992737, 0.6629396881, 0.6449618179, 0.6284629288, 0.6133025077, 0.5993598285, 0.5865302684, 0.5747223611, 0.5637723547, 0.5520659123, 0.5412985862, 0.5313961494, 0.5222913449, 0.5139226962, 0.5062336199, 0.4991726462, 0.4926888087, 0.486737526, 0.4812756644, 0.4762624248, 0.4716590724, 0.4674287183, 0.4635361459, 0.4599476758, 0.4566310645, 0.4535548026, 0.4506907181, 0.4480097684, 0.4454849946, 0.4430907557, 0.4408027718, 0.4385981938, 0.4364557063, 0.4343556726, 0.4322803386, 0.4302141143},
        {0.7059710201, 0.706110377, 0.705794181, 0.7050303511, 0.7038317831, 0.702216091, 0.7002052627, 0.6978252449, 0.6951054726, 0.6920783609, 0.6887787759, 0.6688677689, 0.6368903444, 0.6095801402, 0.5859188735, 0.5651740878, 0.546806793, 0.5304126084, 0.5156830344, 0.5023792552, 0.4903139858, 0.4793386218, 0.4693339714, 0.4602034577, 0.4518680562, 0.4390129595, 0.4266945197, 0.4153724851, 0.4049515769, 0.3953498764, 0.3864963431, 0.3783288284, 0.3707378515, 0.3626614251, 0.3552140256, 0.3483452839, 0.3420095671, 0.336165181, 0.3307737735, 0.3258004657, 0.321210831, 0.3169747269, 0.3130630631, 0.3094483752, 0.3061046433, 0.3030071452, 0.3001323392, 0.2974577725, 0.2949620122, 0.2926241885, 0.2904256715, 0.2883473512, 0.286371542, 0.2844814836, 0.2826613656, 0.2808963673, 0.2791727193, 0.2774777906, 0.2758002133, 0.2741300547},
    },
    {
        {4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 3.995124901, 3.892335272, 3.752974544, 3.627352318, 3.51370361, 3.410601897, 3.316844299, 3.231414928, 3.153448698, 3.082202894, 3.017034629, 2.95738268, 2.90274829, 2.852705674, 2.799643771, 2.74980083, 2.704020511, 2.661945827, 2.623250647, 2.587640097, 2.55482659, 2.524559166, 2.496598066, 2.470718904, 2.446711034, 2.424376238, 2.403527669, 2.383989036, 2.365593959, 2.348182339, 2.331613327, 2.315744027, 2.300444248, 2.285592464, 2.271075807, 2.256790092, 2.242639866, 2.228538467, 2.214408083, 2.200179788},
        {3.761777598, 3.753109541, 3.741964337, 3.728498699, 3.712893556, 3.695350307, 3.676086867, 3.655333663, 3.633329695, 3.61031879, 3.586546146, 3.562255219, 3.53768502, 3.369769715, 3.225370126, 3.099773853, 2.989515813, 2.891994067, 2.805218724, 2.727643141, 2.658047611, 2.587298634, 2.492361067, 2.406684901, 2.329077471, 2.258574134, 2.19436135, 2.135751828, 2.08216012, 2.033083426, 1.988086403, 1.94678892, 1.908853202, 1.873990555, 1.8371981, 1.802572623, 1.770660941, 1.741221992, 1.714035736, 1.688903339, 1.665631445, 1.64405128, 1.624001993, 1.605333343, 1.587904595, 1.571583632, 1.556246235, 1.541775523, 1.528061511, 1.514998734, 1.502494591, 1.490455573, 1.478796759, 1.46743918, 1.456309783, 1.445341426, 1.43447287, 1.423648796, 1.4128198, 1.401942394},
        {2.226246961, 2.222611318, 2.217529621, 2.211091471, 2.203400988, 2.194574652, 2.184739011, 2.174028354, 2.16258241, 2.150544155, 2.13805778, 2.125266858, 2.112312742, 2.013701361, 1.929013748, 1.855460903, 1.790992499, 1.734069408, 1.68351503, 1.638415329, 1.59804996, 1.556934109, 1.501189817, 1.450940927, 1.405481444, 1.364240759, 1.32673772, 1.292565971, 1.261379479, 1.232881158, 1.206813852, 1.182953072, 1.161099316, 1.14108227, 1.119857508, 1.099920332, 1.081608204, 1.064778331, 1.049300259, 1.035056039, 1.021930636, 1.009823667, 0.9986392265, 0.9882875616, 0.9786844137, 0.9697504951, 0.9614110678, 0.9535956142, 0.9462375837, 0.9392729357, 0.9326453308, 0.9262976108, 0.9201776991, 0.9142369856, 0.9084303229, 0.9027160369, 0.8970559463, 0.8914153868, 0.8857632332, 0.8800719151},
        {1.504711039, 1.501243816, 1.496785735, 1.49139948, 1.485157422, 1.478140123, 1.470434747, 1.462133465, 1.453331878, 1.444127516, 1.434618458, 1.424902088, 1.415074008, 1.347907886, 1.29014805, 1.239909541, 1.195806325, 1.156797627, 1.12208749, 1.091057257, 1.063219044, 1.034919454, 0.9969444269, 0.9626739602, 0.9316309883, 0.9034296538, 0.8777445398, 0.8543007313, 0.8328640479, 0.8132333702, 0.7952345611, 0.7787155681, 0.7635412808, 0.7495962219, 0.73487924, 0.721029049, 0.7082643766, 0.6964887968, 0.6856142945, 0.6755613356, 0.6662525779, 0.6576205118, 0.649600797, 0.642133337, 0.6351618381, 0.6286334527, 0.6224984939, 0.616710209, 0.6112246043, 0.6059994934, 0.6009978364, 0.5961822294, 0.5915187038, 0.5869756719, 0.5825239134, 0.5781365703, 0.573789148, 0.5694595182, 0.5651279201, 0.5607769578},
        {1.236803867, 1.234784065, 1.231960901, 1.228384151, 1.22411166, 1.21920814, 1.213743895, 1.20779353, 1.201434672, 1.194746753, 1.187809878, 1.18070381, 1.173507079, 1.118722978, 1.071674304, 1.030811613, 0.9949958327, 0.9633718935, 0.9352861278, 0.9102307382, 0.8878055334, 0.8649633937, 0.833994343, 0.8060782929, 0.7808230245, 0.7579115326, 0.7370765109, 0.7180922062, 0.7007663774, 0.6849339765, 0.6704521398, 0.6571961512, 0.6450551756, 0.6339345943, 0.6221430602, 0.611066851, 0.6008934469, 0.5915435172, 0.5829445883, 0.5750311327, 0.5677392423, 0.5610131481, 0.5547995703, 0.5490486453, 0.5437135632, 0.5387502751, 0.5341172599, 0.5297753412, 0.5256875465, 0.5218182976, 0.5181362949, 0.5146097838, 0.5112098328, 0.5079094364, 0.5046835127, 0.5015089094, 0.4983644146, 0.4952307705, 0.4920906851, 0.4889288417},
        {0.8359505774, 0.8340243424, 0.8315476304, 0.8285552664, 0.8250874569, 0.821188957, 0.8169081926, 0.8122963695, 0.8074065988, 0.8022930645, 0.7970102546, 0.7916122708, 0.7861522266, 0.7488377145, 0.7167489169, 0.688838634, 0.6643368474, 0.6426653482, 0.6233819387, 0.6061429203, 0.5906772468, 0.574955252, 0.5538580149, 0.5348188668, 0.5175727713, 0.5019053632, 0.4876358554, 0.4746115174, 0.4627022488, 0.4517963168, 0.4417969784, 0.43261976, 0.4241896004, 0.4164423455, 0.4082662444, 0.4005716939, 0.3934802092, 0.3869382204, 0.3808968303, 0.3753118531, 0.3701403211, 0.3653447288, 0.3608893317, 0.3567407428, 0.3528676878, 0.3492408071, 0.3458324966, 0.3426167828, 0.3395692246, 0.3366663852, 0.3338876869, 0.3312123497, 0.3286215021, 0.3260975955, 0.3236243963, 0.3211869835, 0.3187717489, 0.316366399, 0.3139599556, 0.3115427543},
    },
    {
        {4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 3.916984725, 3.807275201, 3.707890285, 3.617673409, 3.535634063, 3.46091688, 3.392769172, 3.330555756, 3.273689099, 3.221655636, 3.168914335, 3.116409325, 3.068040433, 3.023397996, 2.982114022, 2.943834428, 2.908251664, 2.875075522, 2.844037498, 2.81488866, 2.787397922, 2.761350655, 2.73654759, 2.71280395, 2.689945286, 2.667821619, 2.646283804, 2.625199644, 2.604449259, 2.583924862, 2.563530571, 2.543182211, 2.522807104, 2.502343832, 2.481741957},
        {4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 3.837130988, 3.690231399, 3.561510847, 3.419298399, 3.256443583, 3.112616704, 2.98489282, 2.870913178, 2.768760678, 2.676861556, 2.593911765, 2.518821142, 2.450670568, 2.388678561, 2.332175804, 2.280584294, 2.233395589, 2.190180265, 2.150541679, 2.114133117, 2.077313441, 2.040703555, 2.006855068, 1.975492588, 1.946368946, 1.91924697, 1.893920702, 1.870196264, 1.847894641, 1.826850239, 1.806909704, 1.787930971, 1.769782507, 1.752342699, 1.735497126, 1.719147642, 1.703197071, 1.687559579, 1.672157633, 1.656921818, 1.641790676, 1.62671053, 1.611635315, 1.596526376, 1.581352252},
        {2.69161205, 2.678570162, 2.663947103, 2.647950163, 2.630795569, 2.612704484, 2.593899286, 2.574600226, 2.555022533, 2.535373994, 2.515853028, 2.496647237, 2.477932404, 2.459871888, 2.395861127, 2.296827725, 2.210785012, 2.13551856, 2.05204685, 1.956050263, 1.871342326, 1.796190583, 1.729197943, 1.669228981, 1.615351697, 1.56679389, 1.52291008, 1.483156114, 1.447069364, 1.414253625, 1.384366752, 1.357107669, 1.332222302, 1.30947564, 1.288662254, 1.267565734, 1.24656373, 1.227216173, 1.209359198, 1.192845609, 1.177533771, 1.163300666, 1.150030209, 1.137614999, 1.125955464, 1.114959169, 1.104540262, 1.094619036, 1.08512158, 1.075978114, 1.067128648, 1.058513521, 1.050079858, 1.041779704, 1.033569945, 1.025412228, 1.017272884, 1.009122842, 1.000937533, 0.9926967828},
        {1.819249363, 1.80921732, 1.798108122, 1.786064279, 1.773234008, 1.759768493, 1.74581935, 1.731536363, 1.717065522, 1.702547395, 1.688115834, 1.67389702, 1.660008799, 1.6465603, 1.602381302, 1.534852395, 1.47609256, 1.424604339, 1.36771936, 1.302577433, 1.245046682, 1.193957128, 1.148365271, 1.107504271, 1.070744622, 1.037564706, 1.007528457, 0.9802682271, 0.9554714244, 0.9328703216, 0.9122337175, 0.8933582356, 0.8760721058, 0.8602166718, 0.845653247, 0.8309253764, 0.816281422, 0.8027420271, 0.7901970351, 0.7785475783, 0.767698788, 0.757568281, 0.7480785055, 0.7391578565, 0.7307400958, 0.7227638815, 0.7151723883, 0.7079130026, 0.7009370794, 0.6941988503, 0.6876590567, 0.6812788284, 0.6750238317, 0.6688630531, 0.6627687273, 0.6567162702, 0.6506842121, 0.6446541261, 0.6386105505, 0.6325409007},
        {1.495340028, 1.488094534, 1.479970613, 1.471083424, 1.461553094, 1.451502491, 1.441055159, 1.430333459, 1.419456963, 1.408541108, 1.397696127, 1.387026243, 1.376629113, 1.366595493, 1.331033959, 1.276015403, 1.228213896, 1.1863992, 1.140026028, 1.08669459, 1.039634626, 0.9978836573, 0.9606655237, 0.9273494341, 0.8974176093, 0.87044105, 0.8460611557, 0.823975619, 0.8039274243, 0.7856964585, 0.7690926399, 0.753948705, 0.7401235013, 0.7274864665, 0.7159234746, 0.7042031855, 0.6925354056, 0.6817867629, 0.6718662213, 0.6626920048, 0.6541854285, 0.6462781476, 0.6389056715, 0.6320083328, 0.6255308134, 0.6194217604, 0.6136334789, 0.6081216867, 0.6028453222, 0.597765619, 0.5928492488, 0.5880630674, 0.5833776987, 0.578766502, 0.5742055249, 0.5696734602, 0.5651516024, 0.5606238009, 0.556076407, 0.5514982127},
        {1.01069409, 1.005120733, 0.9989489567, 0.9922579331, 0.9851300047, 0.9776491625, 0.9698996387, 0.9619646462, 0.9539252902, 0.9458596636, 0.93784213, 0.9299427889, 0.9222271105, 0.9147557222, 0.8902118346, 0.8526957751, 0.8200514221, 0.7914468548, 0.7598440887, 0.7236541295, 0.6916926008, 0.6633095156, 0.6379807063, 0.6152801507, 0.5948581235, 0.5764248366, 0.5597380317, 0.5445934595, 0.530817458, 0.5182612898, 0.5067965097, 0.4963101309, 0.4867067255, 0.477898151, 0.4698073594, 0.4616252091, 0.4534896789, 0.4459677928, 0.4389983529, 0.4325264324, 0.4264993266, 0.4208712672, 0.4155991697, 0.4106432536, 0.4059667199, 0.4015354897, 0.3973179935, 0.3932850015, 0.3894094886, 0.385666028, 0.3820328093, 0.378488238, 0.3750132398, 0.3715905851, 0.3682048485, 0.3648423723, 0.3614912289, 0.3581411812, 0.3547836392, 0.3514116115},
    },
    {
        {4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 3.99458764, 3.900215897, 3.814974749, 3.737781852, 3.66774027, 3.6040557, 3.546030667, 3.493048773, 3.444561538, 3.40007045, 3.35914921, 3.321387354, 3.286419884, 3.253913077, 3.222215499, 3.184766485, 3.149346342, 3.115663365, 3.083474014, 3.052548692, 3.022678993, 2.993676499, 2.965371791, 2.937613597, 2.910268059, 2.883218056, 2.856358424, 2.829612759, 2.802905084, 2.776178786, 2.749390645, 2.72251006, 2.69551824},
        {4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 3.893126151, 3.773592751, 3.669244347, 3.577932172, 3.497965315, 3.359058772, 3.21692873, 3.091375261, 2.979963607, 2.88066066, 2.791806828, 2.712024129, 2.640158582, 2.575235806, 2.516434575, 2.463025517, 2.414403847, 2.370034386, 2.329447456, 2.29222826, 2.258008019, 2.226452026, 2.197274046, 2.170199262, 2.144983578, 2.121404231, 2.098381208, 2.071645888, 2.046267053, 2.022051687, 1.9988388, 1.976477104, 1.954829663, 1.933773045, 1.913196617, 1.893001935, 1.873102207, 1.8534218, 1.833893106, 1.814467281, 1.795095983, 1.775743494, 1.756382821, 1.736995159, 1.717569317},
        {3.368619668, 3.338592045, 3.30728308, 3.275069651, 3.242318398, 3.209380946, 3.176590138, 3.144257259, 3.112670219, 3.082092576, 2.894728437, 2.740933173, 2.612465541, 2.503687681, 2.410613474, 2.330345279, 2.260726061, 2.200116676, 2.147248818, 2.101125292, 2.01950624, 1.935820627, 1.86198586, 1.796558892, 1.738334235, 1.686327939, 1.63972297, 1.597835056, 1.560086359, 1.525989899, 1.495112741, 1.467096108, 1.44162228, 1.418412267, 1.397219509, 1.377824615, 1.36002818, 1.343659684, 1.328554942, 1.314567953, 1.301565231, 1.2888862, 1.273906594, 1.259738537, 1.246265346, 1.233389606, 1.221019477, 1.209071597, 1.1974706, 1.186148716, 1.175045439, 1.164107223, 1.153287222, 1.142543369, 1.131845104, 1.121162033, 1.110471514, 1.099756258, 1.089004024, 1.078207296},
        {2.276835989, 2.25502346, 2.232346341, 2.209061559, 2.185418478, 2.161655673, 2.137998402, 2.114656763, 2.091824493, 2.069678358, 1.942337988, 1.83768047, 1.750134821, 1.675889204, 1.612247853, 1.55725046, 1.5094371, 1.467697739, 1.431172869, 1.399186126, 1.343623509, 1.286771492, 1.236550104, 1.191985443, 1.152264264, 1.116722731, 1.084809652, 1.056063433, 1.030094322, 1.00657383, 0.9852102067, 0.9657615386, 0.9480137546, 0.9317789825, 0.9168913041, 0.9032032077, 0.8905808103, 0.8789096184, 0.8680797049, 0.8579934312, 0.8485616925, 0.8393524833, 0.8286583551, 0.8185068212, 0.8088206747, 0.7995355199, 0.7905908418, 0.7819318654, 0.7735092181, 0.7652786468, 0.7572007739, 0.7492408829, 0.7413687199, 0.7335572423, 0.7257869123, 0.7180383933, 0.7102973976, 0.7025531285, 0.6947980634, 0.6870277269},
        {1.871455371, 1.854773358, 1.837379489, 1.819483139, 1.801287999, 1.782989415, 1.764772299, 1.746809588, 1.729261233, 1.712273653, 1.608182465, 1.522740652, 1.451369745, 1.390937601, 1.339229708, 1.294636266, 1.255958923, 1.222287042, 1.19291601, 1.167291829, 1.121947911, 1.075455904, 1.034436589, 0.9980882736, 0.9657412419, 0.9368488551, 0.9109572055, 0.8876861421, 0.8667146438, 0.8477721664, 0.8306181893, 0.8150533933, 0.8009012667, 0.7880068149, 0.7762330608, 0.7654581195, 0.7555712112, 0.7464776022, 0.7380860787, 0.7303155297, 0.7230917948, 0.7160478886, 0.7077258855, 0.6998547427, 0.6923696366, 0.6852164475, 0.6783441538, 0.6717064429, 0.6652614443, 0.658971509, 0.6528030215, 0.6467262353, 0.6407151235, 0.6347463164, 0.6288028354, 0.6228677964, 0.6169286191, 0.6109756989, 0.6050022356, 0.5990040533},
        {1.264908883, 1.252790811, 1.240192412, 1.227256422, 1.214121377, 1.200919818, 1.18777689, 1.174809313, 1.162124719, 1.14982131, 1.07907666, 1.020933595, 0.9722971229, 0.9310495575, 0.8956932518, 0.8651391447, 0.8385761669, 0.8153876327, 0.7950960383, 0.7773256255, 0.7464575048, 0.7148730511, 0.6869722803, 0.662214135, 0.6401468134, 0.6204015174, 0.6026720287, 0.5867019072, 0.5722746235, 0.5592076834, 0.5473390037, 0.5365341881, 0.5266743081, 0.5176549903, 0.5093840578, 0.5017795598, 0.4947671168, 0.4882831213, 0.4822665027, 0.4766630173, 0.4714231625, 0.4663069352, 0.4603657528, 0.4547260118, 0.4493448193, 0.4441863999, 0.4392171343, 0.4344065919, 0.4297273434, 0.4251548038, 0.4206670966, 0.4162449349, 0.411871511, 0.4075318013, 0.4032149513, 0.3989102185, 0.3946096653, 0.3903072936, 0.3859989241, 0.3816820705},
    },
    {
        {4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 3.991920746, 3.938468614, 3.888637262, 3.84195861, 3.798010604, 3.756412194, 3.716819288, 3.671898535, 3.625099616, 3.579913203, 3.536084997, 3.493391321, 3.451637083, 3.410653939, 3.370298594, 3.330451198, 3.291013783, 3.25190419, 3.213073669, 3.174474872, 3.136081953, 3.09788318, 3.059879386, 3.022082429},
        {4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 3.873613151, 3.711995456, 3.569229916, 3.442516307, 3.329557793, 3.228453168, 3.137615127, 3.055707542, 2.981606268, 2.914318555, 2.85302347, 2.796996828, 2.745606525, 2.698297408, 2.65457153, 2.614010551, 2.576216276, 2.540841166, 2.50757311, 2.476131223, 2.446262443, 2.417738767, 2.3857919, 2.352673552, 2.320651764, 2.289559231, 2.259249161, 2.229593864, 2.20048346, 2.171824697, 2.143539827, 2.115565514, 2.087848859, 2.060358621, 2.033064596, 2.005950464, 1.979008989, 1.952240969, 1.925654213},
        {4, 4, 4, 4, 4, 4, 4, 4, 3.978938744, 3.932855619, 3.890163546, 3.75903638, 3.56591462, 3.404346697, 3.267869491, 3.151798639, 3.052655232, 2.87324597, 2.706929223, 2.563683337, 2.439435605, 2.33098737, 2.235795549, 2.151815455, 2.07738594, 2.011144279, 1.951962285, 1.898897845, 1.851157724, 1.808074446, 1.769057922, 1.733620345, 1.701330988, 1.671813616, 1.644737501, 1.619805583, 1.596768298, 1.575387446, 1.555454905, 1.536783444, 1.519204242, 1.502564878, 1.486727715, 1.468759414, 1.450039846, 1.431965281, 1.414433999, 1.397356528, 1.380654833, 1.364261576, 1.348119438, 1.332180479, 1.316405513, 1.300761676, 1.285229467, 1.269789949, 1.254432781, 1.239153272, 1.223951754, 1.208832972},
        {2.995011023, 2.952028053, 2.909163903, 2.866810853, 2.825326617, 2.785033181, 2.74621678, 2.709128825, 2.673987585, 2.640980425, 2.61026642, 2.520275873, 2.388866475, 2.278761811, 2.18559119, 2.106185691, 2.038190801, 1.916742261, 1.804208078, 1.70721383, 1.623012082, 1.54944526, 1.484798182, 1.427691966, 1.377006523, 1.331823117, 1.291381267, 1.255046051, 1.222283017, 1.192642507, 1.165727422, 1.141209388, 1.118798731, 1.09824261, 1.079318963, 1.061828612, 1.04560422, 1.03048651, 1.016336466, 1.003029244, 0.9904524892, 0.9785049773, 0.9670955068, 0.9543167602, 0.9410694206, 0.9282607057, 0.9158236922, 0.9036996646, 0.8918375456, 0.8801933839, 0.8687298788, 0.8574159307, 0.8462262057, 0.8351395435, 0.8241434484, 0.8132258385, 0.8023801858, 0.7916035956, 0.7808963877, 0.770261685},
        {2.461762504, 2.428064756, 2.394448383, 2.361235244, 2.328719638, 2.297167279, 2.266815211, 2.237872496, 2.210521524, 2.184919788, 2.16120197, 2.088353545, 1.981063678, 1.89130372, 1.815483051, 1.750999244, 1.695919573, 1.596247761, 1.503849568, 1.424268521, 1.355242003, 1.294992983, 1.242108638, 1.19545303, 1.1541033, 1.117302377, 1.084423492, 1.054943247, 1.028420958, 1.004485803, 0.9828099568, 0.9631224138, 0.9451838823, 0.928785342, 0.9137430563, 0.8998919906, 0.887093499, 0.8752152477, 0.8641416138, 0.8537685801, 0.8440023564, 0.8347582654, 0.8259598419, 0.8159774523, 0.8055776925, 0.7955362674, 0.7857966659, 0.7763091824, 0.767030463, 0.7579230976, 0.7489552431, 0.7401002662, 0.7313363963, 0.7226453756, 0.7140163708, 0.7054388605, 0.6969071007, 0.6884184845, 0.6799731968, 0.6715738731},
        {1.663895013, 1.640015585, 1.616202168, 1.592672696, 1.569625898, 1.547240656, 1.525675989, 1.50507157, 1.485548658, 1.467211347, 1.450148011, 1.400153263, 1.327148042, 1.265978784, 1.214217328, 1.170103162, 1.132328223, 1.064856812, 1.002337821, 0.9484521279, 0.9016733788, 0.8608029224, 0.824887879, 0.7931622036, 0.7650036238, 0.7399017317, 0.7174340373, 0.6972478061, 0.6790461204, 0.6625791707, 0.6476263456, 0.6340052156, 0.6215548507, 0.6101347833, 0.5996216463, 0.5899047844, 0.5808912335, 0.5724925057, 0.5646313702, 0.5572384688, 0.5502513829, 0.5436138763, 0.5372752815, 0.5301759779, 0.5228163448, 0.5157003921, 0.5087909401, 0.5020553692, 0.4954653031, 0.4889963244, 0.4826277104, 0.4763421837, 0.4701256698, 0.4639664131, 0.4578574713, 0.4517921325, 0.4457667699, 0.4397797753, 0.4338313265, 0.4279231583},
    },
};

}  // namespace acceptance_oracle

#endif  // LIQ_TESTS_ACCEPTANCE_ORACLE_HPP
