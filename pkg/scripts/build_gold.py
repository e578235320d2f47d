#!/usr/bin/env python3
"""Regenerate the gold mini-corpus fixture from the harvested example table.

Each entry below is one glossed example sentence from the annotation
guidelines, tokenized on whitespace, with the explicitly labelled targets
as (indices, lemma, label) triples and the guideline section it came from.
Run from the repo root:  python scripts/build_gold.py
"""

from __future__ import annotations

import sys
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "snacs_hi" / "data" / "gold.tsv"

ANNOTATOR = "guidelines"

# (sent_id, anchor, sentence, [(indices, lemma, label), ...])
SENTENCES = [
    ("circ-1", "§Circumstance", "durghaṭnā meṁ do log ghāyal hue", [((1,), "meṁ", "Circumstance")]),
    ("circ-2", "§Circumstance", "Koronā kāl ke calte", [((2, 3), "ke_calte", "Circumstance↝Time")]),
    ("circ-3", "§Circumstance", "kām par", [((1,), "par", "Circumstance↝Locus")]),
    ("circ-4", "§Circumstance", "janamdin ke lie kyā kiyā", [((1, 2), "ke_liye", "Circumstance")]),
    ("circ-5", "§Circumstance", "āpne lañc meṁ kyā khāyā", [((2,), "meṁ", "Circumstance")]),
    ("time-1", "§Time", "ham jānvarī meṁ mileṅge", [((2,), "meṁ", "Time")]),
    ("time-2", "§Time", "kaun jāne kal ko kyā hogā", [((3,), "ko", "Time")]),
    ("time-3", "§Time", "2012 kī ardhrātri ke samay śahar ke logoṁ ko ek dhamāke kī āvāz ne ḍarā diyā",
     [((3, 4), "ke_samay", "Time")]),
    ("time-4", "§Time", "disambar ke bād", [((1, 2), "ke_bād", "Time")]),
    ("time-5", "§Time", "disambar ke do mahīne bād", [((1, 4), "ke_bād", "Time↝Interval")]),
    ("time-6", "§StartTime", "mujhe kal se ṭhanḍ lag rahī hai", [((2,), "se", "StartTime")]),
    ("time-7", "§StartTime", "barsoṁ se yuddh ho rahī hai", [((1,), "se", "StartTime↝Interval")]),
    ("time-8", "§EndTime", "kal se kal tak", [((3,), "tak", "EndTime")]),
    ("freq-1", "§Frequency", "tīsrī bār ke lie", [((2, 3), "ke_liye", "Frequency")]),
    ("dur-1", "§Duration", "kitne din meṁ likh pāoge", [((2,), "meṁ", "Duration")]),
    ("dur-2", "§Duration", "kitne din ke lie likh pāoge", [((2, 3), "ke_liye", "Duration")]),
    ("intv-1", "§Interval", "do sāl pahle", [((2,), "pahle", "Interval")]),
    ("loc-1", "§Locus", "maiṁ mumbaī meṁ rahtā hūṁ", [((2,), "meṁ", "Locus")]),
    ("loc-2", "§Locus", "us bakse meṁ kyā hai", [((2,), "meṁ", "Locus")]),
    ("loc-3", "§Locus", "bakse ke andar", [((1, 2), "ke_andar", "Locus")]),
    ("loc-4", "§Locus", "ghar pe", [((1,), "par", "Locus")]),
    ("loc-5", "§Locus", "bakse par", [((1,), "par", "Locus")]),
    ("loc-6", "§Locus", "zamīn ke ūpar", [((1, 2), "ke_ūpar", "Locus")]),
    ("loc-7", "§Locus", "āsmān ke nīce", [((1, 2), "ke_nīce", "Locus")]),
    ("loc-8", "§Locus", "gāṛī ke pās do log khaṛe haiṁ", [((1, 2), "ke_pās", "Locus")]),
    ("loc-9", "§Locus", "uskī cāroṁ or pānī thā", [((0, 1, 2), "kī_cāroṁ_or", "Locus")]),
    ("loc-10", "§Locus", "chat se pūrā śahar dikhtā hai", [((1,), "se", "Locus↝Source")]),
    ("loc-11", "§Locus", "saṛak nadī tak jātī hai", [((2,), "tak", "Locus↝Goal")]),
    ("loc-12", "§Locus", "nāv peṛ se bandhī hai", [((2,), "se", "Locus↝Ancillary")]),
    ("src-1", "§Source", "vah kal hī dillī se niklī", [((4,), "se", "Source")]),
    ("src-2", "§Source", "maiṁne māṭī se banāyā", [((2,), "se", "Source")]),
    ("goal-1", "§Goal", "maiṁ dillī ko gayā", [((2,), "ko", "Goal")]),
    ("goal-2", "§Goal", "nāv ko peṛ se bāṁdho", [((3,), "se", "Goal↝Ancillary")]),
    ("path-1", "§Path", "railī dillī se guzrī thī", [((2,), "se", "Path")]),
    ("path-2", "§Path", "havāī-jahāz mere ūpar se gayā",
     [((1, 2), "ke_ūpar", "Locus"), ((3,), "se", "Path")]),
    ("path-3", "§Path", "vo śaitān mere pīche se bhāg gayā",
     [((2, 3), "ke_pīche", "Locus"), ((4,), "se", "Path")]),
    ("dir-1", "§Direction", "maiṁ darvāze kī taraf cal rahā thā", [((2, 3), "kī_taraf", "Direction")]),
    ("dir-2", "§Direction", "maiṁ bāhar jāne kā soc rahā thā", [((1,), "bāhar", "Direction")]),
    ("dir-3", "§Direction", "vo sīdhe calā", [((1,), "sīdhe", "Direction")]),
    ("dir-4", "§Direction", "vo dāyeṁ calā", [((1,), "dāyeṁ", "Direction")]),
    ("dir-5", "§Direction", "dillī hamāre gāṁv se bīs kilomīṭar dūr hai",
     [((3, 6), "se_dūr", "Locus↝Direction")]),
    ("ext-1", "§Extent", "hameṁ mīloṁ tak bhāgnā paṛā", [((2,), "tak", "Extent")]),
    ("ext-2", "§Extent", "sau rupaye kā munāfā", [((2,), "kā", "Extent↝Identity")]),
    ("ext-3", "§Extent", "acchā sā ādmī", [((1,), "sā", "Extent")]),
    ("ext-4", "§Extent", "vo jitnā kar saktā thā utnā usne kiyā",
     [((1,), "jitnā", "ComparisonRef"), ((5,), "utnā", "Extent")]),
    ("ext-5", "§Extent", "jagah jitnī sundar hai utnī xatarnāk hai",
     [((1,), "jitnā", "ComparisonRef"), ((4,), "utnā", "Characteristic↝Extent")]),
    ("means-1", "§Means", "unhoṁne golībārī se badlā liyā", [((2,), "se", "Means")]),
    ("means-2", "§Means", "zyādā tez bhāgne se ṭāṁg toṛ dī", [((3,), "se", "Means")]),
    ("man-1", "§Manner", "merī bāt dhyān se suno", [((3,), "se", "Manner")]),
    ("man-2", "§Manner", "usne ġusse meṁ kah diyā", [((2,), "meṁ", "Manner")]),
    ("man-3", "§Manner", "ham gujarātī meṁ bāt kar rahe haiṁ", [((2,), "meṁ", "Manner")]),
    ("man-4", "§Manner", "agar āp binā ovan ke kek banā rahī hai", [((2, 4), "ke_binā", "Manner")]),
    ("man-5", "§Manner", "tū jānvar kī tarah khātā hai", [((2, 3), "kī_tarah", "Manner↝ComparisonRef")]),
    ("expl-1", "§Explanation", "merī vajah se sab gaṛbaṛ huā", [((0, 1, 2), "kī_vajah_se", "Explanation")]),
    ("expl-2", "§Explanation", "uske na jāne ke kāraṇ maiṁ ghar pe rahā", [((3, 4), "ke_kāraṇ", "Explanation")]),
    ("expl-3", "§Explanation", "ġusse se rūṭhnā", [((1,), "se", "Explanation↝Source")]),
    ("expl-4", "§Explanation", "aur dambh se phūlā rahtā hai", [((2,), "se", "Explanation↝Source")]),
    ("purp-1", "§Purpose", "vo bhāṣaṇ dene ke liye uṭhī", [((3, 4), "ke_liye", "Purpose")]),
    ("purp-2", "§Purpose", "pīne ke liye kyā cāhiye", [((1, 2), "ke_liye", "Purpose")]),
    ("purp-3", "§Purpose", "pīne ko kyā cāhiye", [((1,), "ko", "Purpose")]),
    ("purp-4", "§Purpose", "sone ke liye koī jagah hai", [((1, 2), "ke_liye", "Purpose")]),
    ("purp-5", "§Purpose", "pīne kā pāni", [((1,), "kā", "Characteristic")]),
    ("purp-6", "§Purpose", "āne ke liye samay niścit hai", [((1, 2), "ke_liye", "Purpose")]),
    ("purp-7", "§Purpose", "āne kā samay niścit hai", [((1,), "kā", "Gestalt")]),
    ("erg-1", "§ergative", "āg ne ghar ko naṣṭ kiyā", [((1,), "ne", "Causer")]),
    ("erg-2", "§ergative", "usne kapṛe dhoye", [((0,), "ne", "Agent")]),
    ("erg-3", "§ergative", "maiṁne usko bahut mārā", [((0,), "ne", "Agent")]),
    ("erg-4", "§ergative", "maiṁne patra likhā", [((0,), "ne", "Originator↝Agent")]),
    ("erg-5", "§ergative", "kisne sansār ko banāyā",
     [((0,), "ne", "Originator↝Agent"), ((2,), "ko", "Theme")]),
    ("erg-6", "§ergative", "maiṁne āpko tohfā diyā",
     [((0,), "ne", "Originator↝Agent"), ((1,), "ko", "Recipient")]),
    ("erg-7", "§ergative", "hamne khelte hue baccoṁ ko dekhā", [((0,), "ne", "Experiencer↝Agent")]),
    ("erg-8", "§ergative", "maiṁne dhyān se sunā",
     [((0,), "ne", "Experiencer↝Agent"), ((2,), "se", "Manner")]),
    ("erg-9", "§ergative", "Rām ne mujhse kitāb le lī",
     [((1,), "ne", "Recipient↝Agent"), ((2,), "se", "Originator↝Source")]),
    ("erg-10", "§ergative", "maiṁne tumse śādī karnī hai", [((0,), "ne", "SocialRel↝Agent")]),
    ("erg-11", "§ergative", "usne chīṁkā", [((0,), "ne", "Agent")]),
    ("erg-12", "§ergative", "maiṁne usse mār khāyī",
     [((0,), "ne", "Recipient↝Agent"), ((1,), "se", "Originator↝Source")]),
    ("acc-1", "§accusative", "mez ko sāf karo", [((1,), "ko", "Theme")]),
    ("acc-2", "§accusative", "mez kī safāī karo", [((1,), "kā", "Theme")]),
    ("acc-3", "§accusative", "usne bacce ko sulāyā", [((2,), "ko", "Theme")]),
    ("acc-4", "§accusative", "arjun ne mahābhārat meṁ karṇ ko parājit kiyā", [((5,), "ko", "Theme")]),
    ("acc-5", "§accusative", "usne kitāb ko becā", [((2,), "ko", "Theme")]),
    ("acc-6", "§accusative", "maiṁne use ḍākghar bhejā", [((1,), "ko", "Theme")]),
    ("acc-7", "§accusative", "uskī piṭāī", [((0,), "kā", "Theme")]),
    ("acc-8", "§accusative", "hamne tum par hamlā kiyā", [((2,), "par", "Theme")]),
    ("acc-9", "§accusative", "maiṁne is deś par rāj kiyā", [((3,), "par", "Theme")]),
    ("acc-10", "§accusative", "maiṁ baccoṁ ko dekh rahā thā", [((2,), "ko", "Stimulus↝Theme")]),
    ("acc-11", "§accusative", "jīvan ko samajhnā muśkil hai", [((1,), "ko", "Topic↝Theme")]),
    ("acc-12", "§accusative", "kyā tum mujhe ullū samajhte ho", [((2,), "ko", "Topic↝Theme")]),
    ("acc-13", "§accusative", "is gande kele ko nahīṁ xarīdūṁgā", [((3,), "ko", "Possession↝Theme")]),
    ("spray-1", "§accusative", "gilās ko pāni se bharo",
     [((1,), "ko", "Goal↝Theme"), ((3,), "se", "Theme↝Instrument")]),
    ("spray-2", "§accusative", "gilās meṁ pāni bharo", [((1,), "meṁ", "Goal↝Locus")]),
    ("spray-3", "§accusative", "pānī ko gilās meṁ bharo",
     [((1,), "ko", "Theme"), ((3,), "meṁ", "Goal↝Locus")]),
    ("dat-1", "§dative", "maiṁne apne dost ko kitāb dī", [((3,), "ko", "Recipient")]),
    ("dat-2", "§dative", "mujhe ek bāt batāo", [((0,), "ko", "Recipient")]),
    ("dat-3", "§dative", "Suṣmitā ko kitne pāṭh paṛhāoge", [((1,), "ko", "Recipient")]),
    ("dat-4", "§dative", "tumko ek cīz dikhānā cāhtā hūṁ", [((0,), "ko", "Experiencer↝Recipient")]),
    ("dat-5", "§dative", "Sunītā ko buxār hai", [((1,), "ko", "Experiencer↝Recipient")]),
    ("dat-6", "§dative", "mujhko Hindī nahīṁ ātī", [((0,), "ko", "Experiencer↝Recipient")]),
    ("dat-7", "§dative", "rājā ko duḥkh huā", [((1,), "ko", "Experiencer↝Recipient")]),
    ("dat-8", "§dative", "ek ām ko dūsre ām se pyār huā",
     [((2,), "ko", "Experiencer↝Recipient"), ((5,), "se", "Stimulus↝Ancillary")]),
    ("dat-9", "§dative", "usko acānak se āvāz sunāī dī",
     [((0,), "ko", "Experiencer↝Recipient"), ((2,), "se", "Manner")]),
    ("dat-10", "§dative", "mujhe dūsrī kitāb cāhiye", [((0,), "ko", "Experiencer↝Recipient")]),
    ("dat-11", "§dative", "mujhe koī fāydā nahīṁ huā", [((0,), "ko", "Beneficiary↝Recipient")]),
    ("dat-12", "§dative", "kampanī ko munāfā hogā", [((1,), "ko", "Beneficiary↝Recipient")]),
    ("dat-13", "§dative", "ām ādmī ko haq hai", [((2,), "ko", "Gestalt↝Recipient")]),
    ("dat-14", "§dative", "mujhko bahut kām hai", [((0,), "ko", "Gestalt↝Recipient")]),
    ("dat-15", "§dative", "Rām ko do beṭiyāṁ huī", [((1,), "ko", "SocialRel↝Recipient")]),
    ("dat-16", "§dative", "usko pānī pīnā cāhiye", [((0,), "ko", "Agent↝Recipient")]),
    ("top-1", "§Topic", "tumhāre bāre meṁ bāt kar rahe the", [((0, 1, 2), "ke_bāre_meṁ", "Topic")]),
    ("top-2", "§Topic", "uskī tasvīr dikhāo", [((0,), "kā", "Topic")]),
    ("top-3", "§Topic", "terā kyā hogā", [((0,), "kā", "Topic")]),
    ("top-4", "§Topic", "is bāt par carcā huī", [((2,), "par", "Topic")]),
    ("ins-1", "§instrumental", "maiṁne cāqū se sabzī ko kāṭā", [((2,), "se", "Instrument")]),
    ("ins-2", "§instrumental", "gāṛī se ghar jāūṁgā", [((1,), "se", "Instrument")]),
    ("ins-3", "§instrumental", "tohfe ko ḍāk se bhejo", [((3,), "se", "Instrument")]),
    ("ins-4", "§instrumental", "us rāste se jāo", [((2,), "se", "Path↝Instrument")]),
    ("ins-5", "§instrumental", "Gūgal ke zariye khoj lo", [((1, 2), "ke_zariye", "Instrument")]),
    ("ins-6", "§instrumental", "Hindī bhāṣā ke mādhyam se ham logoṁ tak pahuṁc sakte haiṁ",
     [((2, 3, 4), "ke_mādhyam_se", "Instrument"), ((7,), "tak", "Goal")]),
    ("ins-7", "§instrumental", "maiṁne bāī se bacce ko sulvāyā", [((2,), "se", "Agent↝Instrument")]),
    ("ins-8", "§instrumental", "tumne mujhse khānā banvāyā", [((1,), "se", "Originator↝Instrument")]),
    ("abl-1", "§ablative", "adhyāpak ne laṛkoṁ ko laṛkiyoṁ se alag kiyā",
     [((3,), "ko", "Theme"), ((5,), "se", "Theme↝Source")]),
    ("abl-2", "§ablative", "tumse ḍar lagtā hai", [((0,), "se", "Stimulus↝Source")]),
    ("abl-3", "§ablative", "tumhāre bartāv se maiṁ ġussā hūṁ", [((2,), "se", "Stimulus↝Source")]),
    ("abl-4", "§ablative", "maiṁne āpse ummīd rakhī", [((1,), "se", "Stimulus↝Source")]),
    ("abl-5", "§ablative", "maiṁ āpse bhīk māṁgtā hūṁ", [((1,), "se", "Recipient↝Source")]),
    ("abl-6", "§ablative", "usne mujhse praśn pūchā", [((1,), "se", "Recipient↝Source")]),
    ("abl-7", "§ablative", "kyā tumheṁ usse kuch milā", [((2,), "se", "Originator↝Source")]),
    ("abl-8", "§ablative", "dost se patā calā", [((1,), "se", "Originator↝Source")]),
    ("abl-9", "§ablative", "vah zukām se pīṛit hai", [((2,), "se", "Causer↝Source")]),
    ("com-1", "§comitative", "vah tumse pyār kartī hai", [((1,), "se", "Stimulus↝Ancillary")]),
    ("com-2", "§comitative", "ham unse ṭakrāye", [((1,), "se", "Theme↝Ancillary")]),
    ("com-3", "§comitative", "kyā tum mujhse śādī karogī beġam", [((2,), "se", "SocialRel↝Ancillary")]),
    ("com-4", "§comitative", "maiṁ tumse laṛūṅgā", [((1,), "se", "Agent↝Ancillary")]),
    ("com-5", "§comitative", "maiṁ tumhāre sāth laṛūṅgā", [((1, 2), "ke_sāth", "Ancillary")]),
    ("com-6", "§comitative", "tumne mere sāth burā bartāv kiyā",
     [((1, 2), "ke_sāth", "Beneficiary↝Ancillary")]),
    ("pass-1", "§passive-subject", "bacce se śīśā ṭūṭ gayā", [((1,), "se", "Agent")]),
    ("pass-2", "§passive-subject", "Rām dvārā likhit", [((1,), "dvārā", "Agent")]),
    ("pass-3", "§passive-subject", "mujhse nā kiyā jāyegā", [((0,), "se", "Agent")]),
    ("gen-1", "§genitive", "Sacin Tendulkar kā 200 ran kā rikarḍ",
     [((2,), "kā", "Agent↝Gestalt"), ((5,), "kā", "Identity")]),
    ("gen-2", "§genitive", "tumhārā usko mārnā",
     [((0,), "kā", "Agent↝Gestalt"), ((1,), "ko", "Theme")]),
    ("gen-3", "§genitive", "merī samajh meṁ āyā", [((0,), "kā", "Experiencer↝Gestalt")]),
    ("gen-4", "§genitive", "tumhārā yah likhnā ṭhīk nahīṁ thā", [((0,), "kā", "Originator↝Gestalt")]),
    ("gen-5", "§genitive", "Sītā kī hāmī", [((1,), "kā", "Originator↝Gestalt")]),
    ("ben-1", "§benefactive", "maiṁne tumhāre liye kiyā", [((1, 2), "ke_liye", "Beneficiary")]),
    ("ben-2", "§benefactive", "iske liye do rupaye lageṅge", [((0, 1), "ke_liye", "Cost")]),
    ("ben-3", "§benefactive", "mere liye bahut āsān kām hai",
     [((0, 1), "ke_liye", "Experiencer↝Beneficiary")]),
    ("agn-1", "§against", "paramparā ke viruddh", [((1, 2), "ke_viruddh", "Beneficiary")]),
    ("agn-2", "§against", "kis deś ke xilāf yuddh hogi", [((2, 3), "ke_xilāf", "Agent↝Beneficiary")]),
    ("agn-3", "§against", "faisle ke xilāf honā", [((1, 2), "ke_xilāf", "Characteristic↝Beneficiary")]),
    ("wo-1", "§without", "kyā tum mere binā dukān jā sakte ho", [((2, 3), "ke_binā", "Ancillary")]),
    ("wo-2", "§without", "āp binā vīzā ke nahīṁ jā sakte", [((1, 3), "ke_binā", "Possession↝Ancillary")]),
    ("wo-3", "§without", "tum binā batāye cal gaye", [((1,), "ke_binā", "Circumstance")]),
    ("wo-4", "§without", "binā kisī kī madad ke", [((0, 4), "ke_binā", "Manner")]),
    ("wo-5", "§without", "masālā ke binā pūrī-masālā kyā hai", [((1, 2), "ke_binā", "PartPortion")]),
    ("id-1", "§Identity", "use maut kī sazā milegī", [((2,), "kā", "Identity")]),
    ("id-2", "§Identity", "cār sāl kī umr", [((2,), "kā", "Identity")]),
    ("id-3", "§Identity", "ānand ṭelīfon ŏpreṭar kā kām kartā hai", [((3,), "kā", "Identity")]),
    ("id-4", "§Identity", "Yuvaraj acchī krikeṭar ke rūp meṁ pari-pakva ho cuke hai",
     [((3, 4, 5), "ke_rūp_meṁ", "Identity")]),
    ("sp-1", "§Species", "Bhārtīy kalā kā udāhraṇ", [((2,), "kā", "Species")]),
    ("ges-1", "§Gestalt", "merā nām Rām hai", [((0,), "kā", "Gestalt")]),
    ("ges-2", "§Gestalt", "ām kā dām", [((1,), "kā", "Gestalt")]),
    ("ges-3", "§Gestalt", "dūdh kī miṭhās acchī hai", [((1,), "kā", "Gestalt")]),
    ("ges-4", "§Gestalt", "kām karne kā nayā tarīqā", [((2,), "kā", "Gestalt")]),
    ("ges-5", "§Gestalt", "paṛhai ke kāraṇ uske pās samay nahin hai",
     [((3, 4), "ke_pās", "Gestalt↝Locus")]),
    ("ges-6", "§Gestalt", "laṛke meṁ sāhas hai", [((1,), "meṁ", "Gestalt↝Locus")]),
    ("ges-7", "§Gestalt", "merī harkatoṁ meṁ pyār hai",
     [((0,), "kā", "Agent↝Gestalt"), ((2,), "meṁ", "Gestalt↝Locus")]),
    ("ges-8", "§Gestalt", "mere pās māṁ hai", [((0, 1), "ke_pās", "SocialRel↝Locus")]),
    ("pos-1", "§Possessor", "yah kiskā paisā hai", [((1,), "kā", "Possessor")]),
    ("pos-2", "§Possessor", "kal tumhārī chiṭṭhī āyī thī", [((1,), "kā", "Possessor")]),
    ("pos-3", "§Possessor", "laṛke ke pās paise nahīṁ hai", [((1, 2), "ke_pās", "Possessor↝Locus")]),
    ("pos-4", "§Possessor", "merā ḍīṅgā ām bahut acchā hai", [((0,), "kā", "Possessor")]),
    ("who-1", "§Whole", "ādmi ghar ke chat par baiṭhā hai", [((2,), "kā", "Whole")]),
    ("who-2", "§Whole", "merī āṁkheṁ", [((0,), "kā", "Whole")]),
    ("who-3", "§Whole", "aṁkh ke kone se", [((1,), "kā", "Whole"), ((3,), "se", "Locus↝Source")]),
    ("who-4", "§Whole", "kamre ke darvāze", [((1,), "kā", "Whole")]),
    ("who-5", "§Whole", "kamre meṁ darvāze haiṁ", [((1,), "meṁ", "Whole↝Locus")]),
    ("who-6", "§Whole", "in donoṁ meṁ se pehle kaun bolegā", [((2, 3), "meṁ_se", "Whole↝Source")]),
    ("who-7", "§Whole", "sāre baccoṁ meṁ sirf tumhāre bāl lāl haiṁ", [((2,), "meṁ", "Whole↝Locus")]),
    ("who-8", "§Whole", "laṛaī in donoṁ ke bīc hai", [((3, 4), "ke_bīc", "Agent↝Whole")]),
    ("org-1", "§Org", "amerikā ke saṁyukt rājya ke rāṣṭrapati", [((4,), "kā", "Org↝Gestalt")]),
    ("org-2", "§Org", "vah choṭe axbār meṁ kām kartā hai", [((3,), "meṁ", "Org↝Locus")]),
    ("org-3", "§Org",
     "Gūgal ke dvāra se āpko pradat koī salāh yā jānkārī koī vārantī nahin utpann karegī",
     [((1, 2, 3), "ke_dvāra_se", "Org↝Agent")]),
    ("org-4", "§Org",
     "Gūgal ke sāth āpkā sambandh sṭeṭ af Kailiforniyā ke qānūn dvāra saṁcālit hogā",
     [((1, 2), "ke_sāth", "Org↝Ancillary")]),
    ("org-5", "§Org", "maiṁ sarkār ke liye kām kartā hūṁ", [((2, 3), "ke_liye", "Org↝Beneficiary")]),
    ("qi-1", "§QuantityItem", "davāoṁ kī kamī", [((1,), "kā", "QuantityItem")]),
    ("qi-2", "§QuantityItem", "ām kā ek kilo", [((1,), "kā", "QuantityItem")]),
    ("qi-3", "§QuantityItem", "seb kā ādhā", [((1,), "kā", "QuantityItem↝Whole")]),
    ("qi-4", "§QuantityItem", "tāṛ ke vṛkṣoṁ kā jhuṇd", [((3,), "kā", "QuantityItem↝Stuff")]),
    ("qi-5", "§QuantityItem", "pilāzā par logoṁ kī bhīṛ ikaṭṭhī huī thī",
     [((3,), "kā", "QuantityItem↝Stuff")]),
    ("ch-1", "§Characteristic", "us tarah kā kām", [((2,), "kā", "Characteristic")]),
    ("ch-2", "§Characteristic", "ājkal kī duniyā meṁ log aise hote hain",
     [((1,), "kā", "Time↝Characteristic")]),
    ("ch-3", "§Characteristic", "Jāpān duniyā ke tīsrā sabse baṛā tel khapat vālā deś hai",
     [((8,), "vālā", "Characteristic")]),
    ("ch-4", "§Characteristic", "nīlā vālā ghar", [((1,), "vālā", "Characteristic")]),
    ("ch-5", "§Characteristic", "do sāl kī umr vālā kuttā", [((2,), "kā", "Identity")]),
    ("ch-6", "§Characteristic", "ūpar vālā kamrā", [((1,), "vālā", "Locus↝Characteristic")]),
    ("ch-7", "§Characteristic", "pīne vālā sāf pāni", [((1,), "vālā", "Purpose↝Characteristic")]),
    ("ch-8", "§Characteristic", "rāy meṁ fark", [((1,), "meṁ", "Characteristic")]),
    ("ch-9", "§Characteristic", "khilāṛī vazan ke hisāb se cune gaye",
     [((2, 3, 4), "ke_hisāb_se", "Characteristic")]),
    ("ch-10", "§Characteristic", "pānī kī botal 20 rūpye kī hai",
     [((1,), "kā", "Characteristic↝Stuff")]),
    ("ch-11", "§Characteristic", "tumhāre gahne aur kapṛoṁ kā baksā",
     [((4,), "kā", "Characteristic↝Stuff")]),
    ("ch-12", "§Characteristic", "bacce ne rākṣasoṁ ke liye kamre kī jāṁc kī",
     [((3, 4), "ke_liye", "Characteristic"), ((6,), "kā", "Theme")]),
    ("ch-13", "§Characteristic", "kitāb Pañjābī meṁ hai", [((2,), "meṁ", "Characteristic↝Locus")]),
    ("ch-14", "§Characteristic", "vah kis hālat meṁ hai", [((3,), "meṁ", "Characteristic↝Locus")]),
    ("ch-15", "§Characteristic", "trikoṇ ke rūp meṁ", [((1, 2, 3), "ke_rūp_meṁ", "Characteristic↝Locus")]),
    ("poss-1", "§Possession", "vah ghar kā mālik hai", [((2,), "kā", "Possession")]),
    ("poss-2", "§Possession", "vah kāfī paise vālā thā", [((3,), "vālā", "Possession↝Characteristic")]),
    ("poss-3", "§Possession", "binā paise kā ādmī", [((2,), "kā", "Possession")]),
    ("poss-4", "§Possession", "unhone pākśāstra kī kitāboṁ par khūb xarc kiyā hai",
     [((4,), "par", "Possession↝Theme")]),
    ("poss-5", "§Possession", "maiṁ us khilaune ko xarīdnā cāhtā hūṁ",
     [((3,), "ko", "Possession↝Theme")]),
    ("pp-1", "§PartPortion", "naī iñjan vālī gāṛī", [((2,), "vālā", "PartPortion↝Characteristic")]),
    ("pp-2", "§PartPortion", "do darvāzoṁ vālā kamrā", [((2,), "vālā", "PartPortion↝Characteristic")]),
    ("pp-3", "§PartPortion", "binā cīnī vālī cāy", [((2,), "vālā", "PartPortion↝Characteristic")]),
    ("pp-4", "§PartPortion", "binā cīnī kā dūdh", [((2,), "kā", "PartPortion")]),
    ("pp-5", "§PartPortion", "rāhul drāvid ke binā kyā hotā hai bhāratīya ballebāzī kā hāl",
     [((2, 3), "ke_binā", "PartPortion")]),
    ("pp-6", "§PartPortion", "śahr ke alāvā gāvoṁ meṁ bhī gas kanekśan baṛh rahe hai",
     [((1, 2), "ke_alāvā", "PartPortion")]),
    ("pp-7", "§PartPortion", "Smith aur Kailis ke alāvā", [((3, 4), "ke_alāvā", "PartPortion")]),
    ("pp-8", "§PartPortion", "inke atirikt Hemant Kumār Talat Mahmūd bhī",
     [((0, 1), "ke_atirikt", "PartPortion")]),
    ("pp-9", "§PartPortion", "Dīwālī aur Holī jaise bhāratīya tyauhār manātīṁ haiṁ",
     [((3,), "jaise", "PartPortion")]),
    ("stuff-1", "§Stuff", "sone kī thālī", [((1,), "kā", "Stuff")]),
    ("stuff-2", "§Stuff", "bīyar kī botal", [((1,), "kā", "Characteristic↝Stuff")]),
    ("om-1", "§OrgMember", "chātroṁ kī kakṣā", [((1,), "kā", "OrgMember↝Stuff")]),
    ("om-2", "§OrgMember", "cricket vāloṁ kī tīm", [((2,), "kā", "OrgMember↝Stuff")]),
    ("om-3", "§OrgMember", "mere beṭe kā parivār", [((2,), "kā", "OrgMember↝Gestalt")]),
    ("om-4", "§OrgMember", "coroṁ kī dhāṛ", [((1,), "kā", "OrgMember↝Stuff")]),
    ("om-5", "§OrgMember", "merī kampanī", [((0,), "kā", "OrgMember↝Possessor")]),
    ("qv-1", "§QuantityValue", "ek kilo kā ām", [((2,), "kā", "QuantityValue")]),
    ("apx-1", "§Approximator", "unkī kampanī Dillī ke lagbhag ek karoṛ garīboṁ tak bijlī pahuṁcātī hai",
     [((4,), "lagbhag", "Approximator")]),
    ("apx-2", "§Approximator", "gāv ke lagbhag chār sau log", [((2,), "lagbhag", "Approximator")]),
    ("apx-3", "§Approximator", "Eyar Inḍīyā ke qarīb ādhe pāylaṭoṁ kī haṛtāl",
     [((3,), "qarīb", "Approximator")]),
    ("apx-4", "§Approximator", "uṛān bharne ke qarīb 20 minat bād", [((3,), "qarīb", "Approximator")]),
    ("apx-5", "§Approximator", "70 fīsadī ke adhik", [((2, 3), "ke_adhik", "Approximator")]),
    ("apx-6", "§Approximator", "jodhpūr ke 1200 se adhik ḍaktar haṛtal par the",
     [((3, 4), "se_adhik", "Approximator")]),
    ("apx-7", "§Approximator", "Inglaind ne vah ṭesṭ 300 ke adhik antar se jītā",
     [((5, 6), "ke_adhik", "Approximator")]),
    ("apx-8", "§Approximator", "ummīd hai ki ham pānc se chah hazār ke bīc nayī logoṁ kī bhartī kareṅge",
     [((8, 9), "ke_bīc", "Approximator")]),
    ("apx-9", "§Approximator", "dalar ke muqāble rūpyā 52 rūpye ke āspās pahuṁcā",
     [((6, 7), "ke_āspās", "Approximator")]),
    ("apx-10", "§Approximator", "gyārah baje ke āspās vah dillī pahunchī",
     [((2, 3), "ke_āspās", "Approximator")]),
    ("cmpl-1", "§Approximator", "iskī qīmat pāṁc se sāt lākh ke bīc hai",
     [((6, 7), "ke_bīc", "ComparisonRef↝Locus")]),
    ("cmpl-2", "§Approximator", "ūṁchāī 5 mīṭar se kam nahiṁ honī cāhiye",
     [((3, 4), "se_kam", "ComparisonRef↝Locus")]),
    ("ens-1", "§Ensemble", "mujhe cāval ke sāth dāl cāhiye", [((2, 3), "ke_sāth", "Ensemble↝Ancillary")]),
    ("cr-1", "§ComparisonRef", "dahī cāval se acchā koī khānā nahīṁ hai", [((2,), "se", "ComparisonRef")]),
    ("cr-2", "§ComparisonRef", "ek citra hazār śabdoṁ se bahtar hai", [((4,), "se", "ComparisonRef")]),
    ("cr-3", "§ComparisonRef", "mujh jaisā ādmī", [((1,), "jaisā", "ComparisonRef")]),
    ("cr-4", "§ComparisonRef", "mere jaisā ādmī", [((0, 1), "ke_jaisā", "ComparisonRef")]),
    ("cr-5", "§ComparisonRef", "uskī jagah yah cāhiye", [((0, 1), "kī_jagah", "ComparisonRef")]),
    ("cr-6", "§ComparisonRef", "skūl jāne ke liye vah kāfī baṛā hai",
     [((2, 3), "ke_liye", "ComparisonRef↝Purpose")]),
    ("cr-7", "§ComparisonRef", "aisā lagā jaise vah jhūṭh bol rahā hai",
     [((2,), "jaise", "Theme↝ComparisonRef")]),
    ("cr-8", "§ComparisonRef", "aisā lagā jaise pūre deś kā khānā khā liyā hai",
     [((2,), "jaise", "Manner↝ComparisonRef")]),
    ("cr-9", "§ComparisonRef", "us nibandh ke muqāble ye nibandh lambā hai",
     [((2, 3), "ke_muqāble", "ComparisonRef")]),
    ("cr-10", "§ComparisonRef", "zindagi ke banisbat ġulāmī pyārī hai",
     [((1, 2), "ke_banisbat", "ComparisonRef")]),
    ("rate-1", "§RateUnit", "prati vyakti", [((0,), "prati", "RateUnit")]),
    ("rate-2", "§RateUnit", "fī śaxs", [((0,), "fī", "RateUnit")]),
    ("soc-1", "§SocialRel", "ā gayā terā bhāī", [((2,), "kā", "SocialRel↝Gestalt")]),
    ("soc-2", "§SocialRel", "pikcar abhī bākī hai mere dost", [((4,), "kā", "SocialRel↝Gestalt")]),
    ("soc-3", "§SocialRel", "merī jān sabse pyāri hai", [((0,), "kā", "SocialRel↝Gestalt")]),
    ("foc-1", "§Focus", "maiṁ hī ghar jāūṅgā", [((1,), "hī", "Focus")]),
    ("foc-2", "§Focus", "tū to ghar nahīṁ jāegā", [((1,), "to", "Focus")]),
    ("foc-3", "§Focus", "Rāhul nām to sunā hī hogā", [((2,), "to", "Focus"), ((4,), "hī", "Focus")]),
    ("disc-1", "§Discourse", "usne jāne ko kahā", [((2,), "ko", "`d")]),
    ("disc-2", "§Discourse", "vah tumse bāt karne ke liye bolā", [((4, 5), "ke_liye", "`d")]),
    ("sfx-1", "§Characteristic", "choṭā-vālā kamrā", [((0,), "vālā", "Characteristic")]),
    ("sfx-2", "§Extent", "choṭā-sā kamrā", [((0,), "sā", "Extent")]),
]


def build() -> str:
    lines = ["# doc_id = gold", "# meta source = annotation guidelines, glossed examples"]
    for sent_id, anchor, sentence, records in SENTENCES:
        tokens = sentence.split()
        lines.append("")
        lines.append(f"# sent_id = {sent_id}")
        lines.append(f"# anchor: {anchor}")
        for i, tok in enumerate(tokens):
            lines.append(f"{i}\t{tok}")
        for indices, lemma, label in records:
            for i in indices:
                assert 0 <= i < len(tokens), (sent_id, indices, tokens)
            idx = ",".join(str(i) for i in indices)
            lines.append(f"@ {idx}\t{lemma}\t{label}\t{ANNOTATOR}\tconfirmed")
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    OUT.write_text(build(), encoding="utf-8")
    n_records = sum(len(records) for _, _, _, records in SENTENCES)
    print(f"wrote {OUT} ({len(SENTENCES)} sentences, {n_records} records)", file=sys.stderr)
