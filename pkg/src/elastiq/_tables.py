"""Coefficient tables (generated by tools/derive_operators.py; do not edit)."""

import numpy as np

NORM_4 = np.array([0.3541666666666667, 1.2291666666666667, 0.8958333333333334, 1.0208333333333333])

D1_INTERIOR_4 = np.array([0.08333333333333333, -0.6666666666666666, 0.0, 0.6666666666666666, -0.08333333333333333])

D1_BOUNDARY_4 = np.array([
    [-1.411764705882353, 1.7352941176470589, -0.23529411764705882, -0.08823529411764706, 0.0, 0.0],
    [-0.5, 0.0, 0.5, 0.0, 0.0, 0.0],
    [0.09302325581395349, -0.686046511627907, 0.0, 0.686046511627907, -0.09302325581395349, 0.0],
    [0.030612244897959183, 0.0, -0.6020408163265306, 0.0, 0.6530612244897959, -0.08163265306122448]])

G_INTERIOR_4 = np.array([
    [0.04166666666666666, -0.16666666666666666, 0.125, 0.0, 0.0],
    [-0.16666666666666666, 0.8333333333333333, -0.5, -0.16666666666666666, 0.0],
    [0.125, -0.5, 0.75, -0.5, 0.125],
    [0.0, -0.16666666666666666, -0.5, 0.8333333333333333, -0.16666666666666666],
    [0.0, 0.0, 0.125, -0.16666666666666666, 0.04166666666666666]])

G_BOUNDARY_4 = np.array([
    [
    [0.7424693428335393, -0.9908222182917416, 0.27129827880014123, -0.04365495498536847, 0.024357232569582367, -0.0036476809261530053],
    [-0.9908222182917416, 1.4942943659377437, -0.7061811339477158, 0.2953743891341002, -0.10985508205065436, 0.017189679218267515],
    [0.27129827880014123, -0.7061811339477158, 0.8148623278681005, -0.545482967919422, 0.19794542735803236, -0.03244193215913625],
    [-0.04365495498536847, 0.2953743891341002, -0.545482967919422, 0.4413771188073515, -0.1782781154659951, 0.030664530429333856],
    [0.024357232569582367, -0.10985508205065436, 0.19794542735803236, -0.1782781154659951, 0.08035411421259875, -0.014523576623563936],
    [-0.0036476809261530053, 0.017189679218267515, -0.03244193215913625, 0.030664530429333856, -0.014523576623563936, 0.002758980061251831]],
    [
    [0.32331882810188595, -0.05073053066259675, -0.2499587199415701, -0.027887270551901818, 0.006562016402804655, -0.0013043233486219096],
    [-0.05073053066259675, 0.17139344938964068, -0.2174637525880903, 0.13133586805239533, -0.04220162258609851, 0.007666588394749539],
    [-0.2499587199415701, -0.2174637525880903, 0.632828290530284, -0.2451568233132769, 0.09689405176258031, -0.01714304644992683],
    [-0.027887270551901818, 0.13133586805239533, -0.2451568233132769, 0.22632796714447756, -0.10309258379919663, 0.018472842467502394],
    [0.006562016402804655, -0.04220162258609851, 0.09689405176258031, -0.10309258379919663, 0.05149942064102311, -0.0096612824211129],
    [-0.0013043233486219096, 0.007666588394749539, -0.01714304644992683, 0.018472842467502394, -0.0096612824211129, 0.001969221357409707]],
    [
    [0.03522050522441876, -0.13085137316783357, 0.05721132513887804, 0.0529358780128461, -0.013536098226419258, -0.0009802369818900578],
    [-0.13085137316783357, 0.631903202754766, -0.19448378710093156, -0.3629957902141311, 0.050670329884494686, 0.005757417843635624],
    [0.05721132513887804, -0.19448378710093156, 0.2538907856681073, -0.16688288578751365, 0.06397193728004108, -0.013707375198581243],
    [0.0529358780128461, -0.3629957902141311, -0.16688288578751365, 0.6128062851855337, -0.15224347554956555, 0.016379988352830575],
    [-0.013536098226419258, 0.050670329884494686, 0.06397193728004108, -0.15224347554956555, 0.06090364418645862, -0.00976633757500962],
    [-0.0009802369818900578, 0.005757417843635624, -0.013707375198581243, 0.016379988352830575, -0.00976633757500962, 0.0023165435590147224]],
    [
    [0.023991323840148564, -0.05676254454446514, 0.004782449335839643, 0.03943968085778611, -0.017383150745973477, 0.005932241256664318],
    [-0.05676254454446514, 0.1607423152510663, -0.11103799302975882, -0.06371446697246948, 0.10138637475227608, -0.030613685456649005],
    [0.004782449335839643, -0.11103799302975882, 0.5484185959332665, -0.10497732297964352, -0.4004780830673422, 0.06329235380763854],
    [0.03943968085778611, -0.06371446697246948, -0.10497732297964352, 0.3028219621958858, -0.2330524918518941, 0.05948263875033512],
    [-0.017383150745973477, 0.10138637475227608, -0.4004780830673422, -0.2330524918518941, 0.682242820959912, -0.13271547004697812],
    [0.005932241256664318, -0.030613685456649005, 0.06329235380763854, 0.05948263875033512, -0.13271547004697812, 0.03462192168898917]]])

P_EDGE_4 = np.array([
    [1.0, 0.0, 0.0, 0.0],
    [0.4050661621525934, 0.6598015135422198, -0.03480151354221986, -0.03006616215259338],
    [-0.012250508939635333, 1.036751526818906, -0.036751526818906, 0.012250508939635333],
    [-0.07645988228004956, 0.6043796468401487, 0.5206203531598513, -0.04854011771995043],
    [-0.01367498672331386, 0.04102496016994158, 0.9589750398300584, 0.01367498672331386],
    [-0.01367498672331386, -0.021475039830058416, 0.5214750398300584, 0.5761749867233139],
    [-0.01367498672331386, 0.04102496016994158, -0.04102496016994158, 1.013674986723314],
    [-0.01367498672331386, 0.04102496016994158, -0.10352496016994159, 0.5761749867233139]])

P_INTERIOR_4 = np.array([-0.0625, 0.5625, 0.5625, -0.0625])

NORM_6 = np.array([0.3159490740740741, 1.3903935185185186, 0.6275462962962963, 1.2405092592592593, 0.9116898148148148, 1.0139120370370371])

D1_INTERIOR_6 = np.array([-0.016666666666666666, 0.15, -0.75, 0.0, 0.75, -0.15, 0.016666666666666666])

D1_BOUNDARY_6 = np.array([
    [-1.5825335189391163, 2.029355019903778, -0.12541822355728136, -0.47454025935966004, 0.12058270447163406, 0.03255427748064571, 0.0, 0.0, 0.0],
    [-0.4611448708343739, 0.0, 0.2781153750104054, 0.2771025833125225, -0.0828269374843919, -0.011246150004162158, 0.0, 0.0, 0.0],
    [0.06314398131070946, -0.616193286610107, 0.0, 0.5657199065535473, 0.017613426779786057, -0.030284028033935817, 0.0, 0.0, 0.0],
    [0.12086210113827206, -0.31058344218448714, -0.28618523356347575, 0.0, 0.5100143061516452, -0.04754307395658394, 0.013435342414629596, 0.0, 0.0],
    [-0.04178832889001735, 0.12631712580931828, -0.012123905039989844, -0.6939613219922982, 0.0, 0.7678050019042783, -0.1645296432652025, 0.01828107147391139, 0.0],
    [-0.01014436504493809, 0.015422022328257345, 0.018743864295335724, 0.058168382761428584, -0.6903951964567019, 0.0, 0.7397091390607521, -0.1479418278121504, 0.016437980868016712]])

G_INTERIOR_6 = np.array([
    [0.005555555555555556, -0.025, 0.05, -0.030555555555555555, 0.0, 0.0, 0.0],
    [-0.025, 0.125, -0.3, 0.175, 0.025, 0.0, 0.0],
    [0.05, -0.3, 0.95, -0.425, -0.3, 0.025, 0.0],
    [-0.030555555555555555, 0.175, -0.425, 0.5611111111111111, -0.425, 0.175, -0.030555555555555555],
    [0.0, 0.025, -0.3, -0.425, 0.95, -0.3, 0.05],
    [0.0, 0.0, 0.025, 0.175, -0.3, 0.125, -0.025],
    [0.0, 0.0, 0.0, -0.030555555555555555, 0.05, -0.025, 0.005555555555555556]])

G_BOUNDARY_6 = np.array([
    [
    [0.99928311389361, -2.0694238554929565, 2.203870473409628, -1.9394558838955414, 1.0491445626640066, -0.24278164901516808, -0.0020469147965284096, 0.0016191823042902564, -0.0002090290713408216],
    [-2.0694238554929565, 6.6694215482194075, -11.025781550714695, 10.88903611715156, -5.690642836554726, 1.243950480939958, -0.014413189387731506, -0.0026778323934963932, 0.0005311182326817876],
    [2.203870473409628, -11.025781550714695, 22.445966612651436, -23.130713805972988, 12.152644982983206, -2.7729392521028684, 0.1508193249437555, -0.026498632224635776, 0.002631847027160128],
    [-1.9394558838955414, 10.88903611715156, -23.130713805972988, 24.33507994052914, -13.27424040903561, 3.502013933341603, -0.4912062059486315, 0.1245401878661121, -0.015053874035638737],
    [1.0491445626640066, -5.690642836554726, 12.152644982983206, -13.27424040903561, 8.015721266921847, -2.8800280498918838, 0.8402027531059179, -0.24462891620090302, 0.03182664600814279],
    [-0.24278164901516808, 1.243950480939958, -2.7729392521028684, 3.502013933341603, -2.8800280498918838, 1.7659830703654873, -0.8460465946362876, 0.26613635536731395, -0.036288294368157586],
    [-0.0020469147965284096, -0.014413189387731506, 0.1508193249437555, -0.4912062059486315, 0.8402027531059179, -0.8460465946362876, 0.5066860420484851, -0.16766058844480958, 0.023665373115829696],
    [0.0016191823042902564, -0.0026778323934963932, -0.026498632224635776, 0.1245401878661121, -0.24462891620090302, 0.26613635536731395, -0.16766058844480958, 0.05750999792870015, -0.008339754202570132],
    [-0.0002090290713408216, 0.0005311182326817876, 0.002631847027160128, -0.015053874035638737, 0.03182664600814279, -0.036288294368157586, 0.023665373115829696, -0.008339754202570132, 0.001235967293892845]],
    [
    [0.3862918733074967, -0.416632582503881, 0.5868930939279048, -0.8876142492778707, 0.4022202864156426, -0.08655607783253594, 0.01982783562560221, -0.0048899700208756, 0.0004597903585171065],
    [-0.416632582503881, 1.939324731988287, -3.6229659109805925, 3.451624434608929, -1.7848825815913334, 0.5376632005152101, -0.1355568550233981, 0.03511526381844296, -0.003689700831665102],
    [0.5868930939279048, -3.6229659109805925, 7.044485994069107, -6.778192756665999, 3.830045741943019, -1.3861500223338432, 0.42860697528155334, -0.11597222179222033, 0.013249106551069187],
    [-0.8876142492778707, 3.451624434608929, -6.778192756665999, 7.449024136164839, -4.759633635605183, 2.140835223863315, -0.8172986493403922, 0.22892334484137355, -0.027667848589010113],
    [0.4022202864156426, -1.7848825815913334, 3.830045741943019, -4.759633635605183, 3.8149142783866914, -2.263958286107532, 1.0169588494297201, -0.2922284108645853, 0.03656375799355921],
    [-0.08655607783253594, 0.5376632005152101, -1.3861500223338432, 2.140835223863315, -2.263958286107532, 1.6782619307178674, -0.832857279160816, 0.24392871841253727, -0.031167408074202325],
    [0.01982783562560221, -0.1355568550233981, 0.42860697528155334, -0.8172986493403922, 1.0169588494297201, -0.832857279160816, 0.43221516305924895, -0.12856719118331897, 0.016671151311801108],
    [-0.0048899700208756, 0.03511526381844296, -0.11597222179222033, 0.22892334484137355, -0.2922284108645853, 0.24392871841253727, -0.12856719118331897, 0.03879139057172487, -0.005100923783078429],
    [0.0004597903585171065, -0.003689700831665102, 0.013249106551069187, -0.027667848589010113, 0.03656375799355921, -0.031167408074202325, 0.016671151311801108, -0.005100923783078429, 0.0006820750630092496]],
    [
    [0.11147588448638851, -0.5514633361049329, 1.0187365076811854, -0.9617534368971028, 0.4768449806049494, -0.094726324431824, 0.001059392176571694, -0.00016108984058468834, -1.2577674650751658e-05],
    [-0.5514633361049329, 2.816878521749945, -5.055025458805549, 4.763436998696702, -2.5122558939506914, 0.5755357082909462, -0.0487414303817062, 0.013113922447791193, -0.001479031942504691],
    [1.0187365076811854, -5.055025458805549, 10.093669658678277, -10.238934503187533, 5.473159296938007, -1.5000387013944048, 0.27637289409967064, -0.07732615771080076, 0.009386463701146236],
    [-0.9617534368971028, 4.763436998696702, -10.238934503187533, 11.118714753661395, -6.498757318381184, 2.345945649963256, -0.704088644458629, 0.20035593557162068, -0.024919434968520338],
    [0.4768449806049494, -2.5122558939506914, 5.473159296938007, -6.498757318381184, 4.7688944365706325, -2.4618764293029436, 1.0073678901786165, -0.28987525637855915, 0.03649829372117143],
    [-0.094726324431824, 0.5755357082909462, -1.5000387013944048, 2.345945649963256, -2.4618764293029436, 1.784138055565071, -0.8694188966498919, 0.252498569414087, -0.032057631454296756],
    [0.001059392176571694, -0.0487414303817062, 0.27637289409967064, -0.704088644458629, 1.0073678901786165, -0.8694188966498919, 0.4532494390410233, -0.1327930158923497, 0.016992371886693863],
    [-0.00016108984058468834, 0.013113922447791193, -0.07732615771080076, 0.20035593557162068, -0.28987525637855915, 0.252498569414087, -0.1327930158923497, 0.03925987905351458, -0.005072786664718915],
    [-1.2577674650751658e-05, -0.001479031942504691, 0.009386463701146236, -0.024919434968520338, 0.03649829372117143, -0.032057631454296756, 0.016992371886693863, -0.005072786664718915, 0.0006643333956801584]],
    [
    [0.09153138521123419, -0.39434514218909483, 0.611123709371558, -0.6050155711330386, 0.34206763823532893, -0.03872264277140122, -0.009256130284318681, 0.002979593455605667, -0.0003628398958732404],
    [-0.39434514218909483, 1.8004954791034056, -3.133464986679654, 3.122358078561942, -1.6931189006120109, 0.3022202248445105, -0.004526975051815818, 0.0004428248777487709, -6.060285503151075e-05],
    [0.611123709371558, -3.133464986679654, 6.58005357836416, -6.587451300437389, 3.375117163895942, -0.9977261914054142, 0.20505522206565863, -0.06018482961296362, 0.007477634438105882],
    [-0.6050155711330386, 3.122358078561942, -6.587451300437389, 7.324947750488709, -4.721473301608828, 1.9837809440782221, -0.6892946789836298, 0.19672680147941746, -0.02457872244540399],
    [0.34206763823532893, -1.6931189006120109, 3.375117163895942, -4.721473301608828, 4.321262006335004, -2.4252580151590397, 1.0667319962681734, -0.3034607184651034, 0.03813213111053571],
    [-0.03872264277140122, 0.3022202248445105, -0.9977261914054142, 1.9837809440782221, -2.4252580151590397, 1.8704979573476668, -0.928853769369709, 0.26791534709037496, -0.033853854655210146],
    [-0.009256130284318681, -0.004526975051815818, 0.20505522206565863, -0.6892946789836298, 1.0667319962681734, -0.928853769369709, 0.48252591340057055, -0.14020524026991302, 0.01782366222498437],
    [0.002979593455605667, 0.0004428248777487709, -0.06018482961296362, 0.19672680147941746, -0.3034607184651034, 0.26791534709037496, -0.14020524026991302, 0.04104576162072193, -0.005259540175888436],
    [-0.0003628398958732404, -6.060285503151075e-05, 0.007477634438105882, -0.02457872244540399, 0.03813213111053571, -0.033853854655210146, 0.01782366222498437, -0.005259540175888436, 0.0006821322537816192]],
    [
    [0.24941182636349224, -1.2346678853789232, 2.4478939765291807, -2.433052120308448, 1.2896388284125484, -0.3745086226581312, 0.07564188582058595, -0.022937894378117774, 0.002580005597815044],
    [-1.2346678853789232, 6.171290784497904, -12.377728940677757, 12.523408073008824, -6.754555026341366, 1.9859068187982558, -0.4280097317441862, 0.12899794599054104, -0.014642038153288406],
    [2.4478939765291807, -12.377728940677757, 25.188559931245276, -26.099539599598288, 14.447870489211105, -4.380936971136176, 1.0525477594541757, -0.3154241385728608, 0.03675749354534602],
    [-2.433052120308448, 12.523408073008824, -26.099539599598288, 28.265113789503324, -16.271617600052206, 5.099363045360548, -1.4781664594007995, 0.4496207535435479, -0.05512988205649172],
    [1.2896388284125484, -6.754555026341366, 14.447870489211105, -16.271617600052206, 10.617756088777893, -4.522606607966274, 1.5951703112043947, -0.45790553153794034, 0.05624904829185037],
    [-0.3745086226581312, 1.9859068187982558, -4.380936971136176, 5.099363045360548, -4.522606607966274, 3.147946278566139, -1.2555768347993328, 0.34126911545691585, -0.04085622162194674],
    [0.07564188582058595, -0.4280097317441862, 1.0525477594541757, -1.4781664594007995, 1.5951703112043947, -1.2555768347993328, 0.584388403018533, -0.16624877053307152, 0.020253436979704303],
    [-0.022937894378117774, 0.12899794599054104, -0.3154241385728608, 0.4496207535435479, -0.45790553153794034, 0.34126911545691585, -0.16624877053307152, 0.04860425099107357, -0.005975730960087022],
    [0.002580005597815044, -0.014642038153288406, 0.03675749354534602, -0.05512988205649172, 0.05624904829185037, -0.04085622162194674, 0.020253436979704303, -0.005975730960087022, 0.0007638883770984956]],
    [
    [0.04938379658877459, -0.23251879416221186, 0.44237387749359947, -0.4327469788786954, 0.23331979459276111, -0.0617650140669114, 0.0031000085157925628, -0.0018458435175681964, 0.0006991534344592543],
    [-0.23251879416221186, 1.1182405509218651, -2.1797203476671956, 2.192770845860682, -1.2116410873340877, 0.36722898242286806, -0.0753604348653949, 0.02689605126886435, -0.005895766445389472],
    [0.44237387749359947, -2.1797203476671956, 4.391960493372745, -4.6508571177021345, 2.807633433339886, -1.078739216070459, 0.3597279817184843, -0.11120263621899149, 0.01882353173406602],
    [-0.4327469788786954, 2.192770845860682, -4.6508571177021345, 5.436329835112797, -3.994982419634578, 2.012499250531939, -0.746761232497151, 0.21305020913361672, -0.029302391926475546],
    [0.23331979459276111, -1.2116410873340877, 2.807633433339886, -3.994982419634578, 4.225102929844051, -2.4783932969963023, 0.5813935935906529, -0.1839782628384969, 0.021545315436114806],
    [-0.0617650140669114, 0.36722898242286806, -1.078739216070459, 2.012499250531939, -2.4783932969963023, 1.969191407021644, -0.963506940356333, 0.26646912697122005, -0.03298429945766466],
    [0.0031000085157925628, -0.0753604348653949, 0.3597279817184843, -0.746761232497151, 0.5813935935906529, -0.963506940356333, 1.0946207524504388, -0.2961338100882128, 0.042920081531724254],
    [-0.0018458435175681964, 0.02689605126886435, -0.11120263621899149, 0.21305020913361672, -0.1839782628384969, 0.26646912697122005, -0.2961338100882128, 0.10723245152111491, -0.020487286231546324],
    [0.0006991534344592543, -0.005895766445389472, 0.01882353173406602, -0.029302391926475546, 0.021545315436114806, -0.03298429945766466, 0.042920081531724254, -0.020487286231546324, 0.004681661924711707]]])

P_EDGE_6 = np.array([
    [1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.344178535875486, 0.8306067772760095, -0.2017124678588983, 0.05471138116577751, -0.04760514723632837, 0.019820920777953596],
    [-0.018147697300197982, 1.0650095485170636, -0.07856122106627493, 0.027103345098422476, 0.012177265434714988, -0.007581240683728243],
    [-0.09704596194473718, 0.6813937587218688, 0.4323845845598965, -0.04005668656353062, 0.042614394283582366, -0.019290089057079886],
    [-0.01867150131567546, 0.06882942518877955, 0.9113973124016365, 0.03954652481916803, 0.004754818980013748, -0.005856580073922302],
    [-0.004768377030202318, -0.035353188315281746, 0.5015965235631501, 0.6300133295042631, -0.09956159128583826, 0.008073303563908984],
    [-0.01204170643829761, 0.047399845836012706, -0.06918231896107474, 1.043564946250124, -0.0089737867695867, -0.0007669799171777274],
    [-0.007822508155133604, 0.04507024951248959, -0.15283716649862233, 0.6295963339722654, 0.5698691242770457, -0.09559478310804483],
    [-0.0036033098719695997, 0.019303153188966474, -0.0411795140361699, 0.04375272169440685, 0.976837035323678, 0.0048899137010880766],
    [0.0006158884111944052, 0.0052548068654433575, -0.015459361573717481, -0.05380964058345175, 0.5556799463703105, 0.593655860510221],
    [0.00483508669435841, -0.00879353945807976, -0.01317670911126506, 0.04394049713868964, -0.03735214258305711, 1.010546807319354],
    [0.009054284977522415, -0.022841885781602875, 0.0008246933511873609, 0.055753134860831034, -0.1421029815364247, 0.5993127541284868]])

P_INTERIOR_6 = np.array([0.01171875, -0.09765625, 0.5859375, 0.5859375, -0.09765625, 0.01171875])

BOUNDARY_DERIV = np.array([-2.0833333333333335, 4.0, -3.0, 1.3333333333333333, -0.25])
