"""Profile commands (recognize4, maximal)."""

from prefgeo.click.commands.command_factory import create_command
from prefgeo.click.utils_echo import echo_json, echo_saved
from prefgeo.core.enums import NormTag
from prefgeo.core.profiles.bounds import size_bound_report
from prefgeo.core.profiles.canonical import CANONICAL
from prefgeo.core.profiles.ranking import check_last_place_bound
from prefgeo.core.profiles.recognition import recognize_l2_four
from prefgeo.ext.models.documents import profile_to_document
from prefgeo.ext.obj.documents import ProfileFile


@create_command('recognize4', 'Decide whether a 4-candidate profile is l2-Euclidean in the plane')
def recognize4(ctx, profile):
    prof = ProfileFile.load(profile)
    verdict = recognize_l2_four(prof)
    size = size_bound_report(prof, NormTag.L1)
    last = check_last_place_bound(prof, NormTag.L1, 2)
    echo_json(verdict.to_dict() | {
        "size": len(prof),
        "l1_checks": {
            "size_bound": size.to_dict(),
            "last_place": last.to_dict(),
            "passed": size.within_bound and last.passed,
        },
    })


@create_command('maximal', 'Emit a canonical maximal 4-candidate profile')
def maximal(ctx, which, out):
    prof = CANONICAL.get(which)
    if out:
        ProfileFile.dump(out, prof)
        echo_saved(f"{which} ({len(prof)} rankings)", out)
        return
    echo_json(profile_to_document(prof))
